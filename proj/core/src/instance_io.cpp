#include "splitcut/instance_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace splitcut {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw InputError("instance line " + std::to_string(line) + ": " + msg);
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  std::optional<std::size_t> n;
  std::optional<RationalVector> f;
  std::optional<std::string> name;
  std::optional<Rational> epsilon;
  std::vector<RationalVector> r;
  std::vector<RationalVector> q;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    try {
      if (!n) {
        if (!starts_with(line, "corner")) fail(line_no, "expected header 'corner n=<int>'");
        const std::string_view rest = trim(line.substr(6));
        if (!starts_with(rest, "n=")) fail(line_no, "expected header 'corner n=<int>'");
        const Rational dim = Rational::parse(rest.substr(2));
        if (!dim.is_integer() || dim < Rational(1)) fail(line_no, "dimension must be a positive integer");
        n = static_cast<std::size_t>(dim.num().get_ui());
        continue;
      }
      auto vector_after = [&](std::size_t skip) {
        RationalVector v = parse_vector(line.substr(skip));
        if (v.dim() != *n) fail(line_no, "expected " + std::to_string(*n) + " entries");
        return v;
      };
      if (starts_with(line, "r:")) {
        r.push_back(vector_after(2));
      } else if (starts_with(line, "q:")) {
        q.push_back(vector_after(2));
      } else if (const auto eq = line.find('='); eq != std::string_view::npos) {
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key == "f") {
          if (f) fail(line_no, "f given twice");
          f = vector_after(eq + 1);
        } else if (key == "name") {
          if (value.empty()) fail(line_no, "empty name");
          name = std::string(value);
        } else if (key == "epsilon") {
          epsilon = Rational::parse(value);
        } else {
          fail(line_no, "unknown key '" + std::string(key) + "'");
        }
      } else {
        fail(line_no, "unrecognized line '" + std::string(line) + "'");
      }
    } catch (const InputError& e) {
      const std::string what = e.what();
      if (starts_with(what, "instance line")) throw;
      fail(line_no, what);
    }
  }
  if (!n) throw InputError("instance: missing 'corner n=<int>' header");
  if (!f) throw InputError("instance: missing 'f = ...' line");
  return {CornerRelaxation(std::move(*f), std::move(r), std::move(q)), std::move(name), std::move(epsilon)};
}

std::string serialize_instance(const InstanceFile& instance) {
  const auto& rel = instance.relaxation;
  std::ostringstream os;
  os << "corner n=" << rel.dim() << '\n';
  if (instance.name) os << "name = " << *instance.name << '\n';
  if (instance.epsilon) os << "epsilon = " << *instance.epsilon << '\n';
  os << "f = " << str(rel.f()) << '\n';
  for (const auto& r : rel.continuous_columns()) os << "r: " << str(r) << '\n';
  for (const auto& q : rel.integer_columns()) os << "q: " << str(q) << '\n';
  return os.str();
}

InstanceFile read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance_file(const std::string& path, const InstanceFile& instance) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write instance file '" + path + "'");
  out << serialize_instance(instance);
}

}  // namespace splitcut
