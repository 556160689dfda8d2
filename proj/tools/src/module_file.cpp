#include "frobgen/module_file.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "frobgen/fp_poly.hpp"

namespace frobgen {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

int bracket_balance(const std::string& s) {
  int depth = 0;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
  }
  return depth;
}

std::uint64_t parse_count(const std::string& key, const std::string& value, std::size_t line) {
  std::uint64_t v = 0;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc{} || ptr != end || value.empty()) {
    throw ParseError("key '" + key + "' needs a non-negative integer, got '" + value + "'", line);
  }
  return v;
}

std::vector<std::string> split_vars(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

}  // namespace

gf::FieldSpec ModuleFile::base_field() const { return gf::default_field(p, k); }

ModuleFile parse_module_file(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(strip_comment(line));
  }
  std::map<std::string, std::pair<std::string, std::size_t>> values;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string line = trim(lines[i]);
    if (line.empty()) continue;
    const std::size_t lineno = i + 1;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", lineno);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    while (bracket_balance(value) > 0) {
      if (++i >= lines.size()) throw ParseError("unterminated matrix for key '" + key + "'", lineno);
      value += " " + trim(lines[i]);
    }
    if (key == "q_exponent") key = "k";
    if (key != "p" && key != "k" && key != "n" && key != "vars" && key != "A") {
      throw ParseError("unknown key '" + key + "'", lineno);
    }
    if (values.count(key)) throw ParseError("duplicate key '" + key + "'", lineno);
    values[key] = {value, lineno};
  }
  for (const char* key : {"p", "k", "n", "vars", "A"}) {
    if (!values.count(key)) throw ParseError(std::string("missing key '") + key + "'", lines.size());
  }

  const std::uint64_t p = parse_count("p", values["p"].first, values["p"].second);
  if (p > UINT32_MAX || !gf::fp::is_prime(p)) throw InvalidArgument("p = " + values["p"].first + " is not a prime");
  const std::uint64_t k = parse_count("k", values["k"].first, values["k"].second);
  if (k < 1 || k > 64) throw InvalidArgument("k must lie in [1, 64]");
  const std::uint64_t n = parse_count("n", values["n"].first, values["n"].second);
  if (n < 1 || n > 64) throw InvalidArgument("n must lie in [1, 64]");
  std::vector<std::string> vars = split_vars(values["vars"].first);
  const sym::Ring ring(static_cast<std::uint32_t>(p), vars);
  SymMatrix a = parse_matrix(values["A"].first, ring);
  if (a.rows() != n || a.cols() != n) {
    throw InvalidArgument("A is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " but n = " +
                          std::to_string(n));
  }
  return ModuleFile{static_cast<std::uint32_t>(p), static_cast<unsigned>(k), static_cast<unsigned>(n),
                    std::move(vars), std::move(a)};
}

ModuleFile load_module_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read module file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_module_file(ss.str());
}

std::string to_module_text(const ModuleFile& m) {
  std::ostringstream os;
  os << "p = " << m.p << "\nk = " << m.k << "\nn = " << m.n << "\nvars = ";
  for (std::size_t i = 0; i < m.vars.size(); ++i) os << (i ? ", " : "") << m.vars[i];
  os << "\nA = " << m.A.to_string() << "\n";
  return os.str();
}

}  // namespace frobgen
