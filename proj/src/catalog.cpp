#include "veelocus/catalog.hpp"

#include <array>
#include <charconv>
#include <map>
#include <sstream>

namespace veelocus {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw BadParameter("catalog: bad integer for " + what + ": '" + text + "'");
  return value;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double value = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw BadParameter("catalog: bad number for " + what + ": '" + text + "'");
  }
}

// fields after the head, as key=value pairs
std::map<std::string, std::string> parse_fields(const std::vector<std::string>& parts,
                                                std::size_t start) {
  std::map<std::string, std::string> fields;
  for (std::size_t i = start; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string::npos)
      throw BadParameter("catalog: expected key=value, got '" + parts[i] + "'");
    fields[parts[i].substr(0, eq)] = parts[i].substr(eq + 1);
  }
  return fields;
}

std::string require(const std::map<std::string, std::string>& fields,
                    const std::string& key, const std::string& name) {
  const auto it = fields.find(key);
  if (it == fields.end())
    throw BadParameter("catalog: '" + name + "' needs field " + key + "=");
  return it->second;
}

std::vector<double> parse_double_list(const std::string& text, const std::string& what) {
  std::vector<double> values;
  for (const std::string& part : split(text, ','))
    values.push_back(parse_double(part, what));
  return values;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> values;
  for (const std::string& part : split(text, ','))
    values.push_back(parse_int(part, what));
  return values;
}

Configuration make_locus_catalog(const std::string& name, const Tolerance& tol);

Configuration make_named(const std::string& name, const Tolerance& tol) {
  const std::vector<std::string> parts = split(name, ':');
  const std::string& head = parts[0];

  if (head == "A" || head == "B" || head == "C" || head == "D") {
    if (parts.size() < 2) throw BadParameter("catalog: '" + head + "' needs a rank");
    const int rank = parse_int(parts[1], "rank");
    if (rank < 2) throw BadParameter("catalog: rank must be >= 2");
    const auto fields = parse_fields(parts, 2);
    const std::vector<int> mults = parse_int_list(require(fields, "m", head), "m");
    const CoxeterFamily family = head == "A"   ? CoxeterFamily::A
                                 : head == "B" ? CoxeterFamily::B
                                 : head == "C" ? CoxeterFamily::C
                                               : CoxeterFamily::D;
    return coxeter_positive_roots(family, static_cast<std::size_t>(rank), mults);
  }
  if (head == "An1") {
    const auto fields = parse_fields(parts, 1);
    return a_n1(static_cast<std::size_t>(parse_int(require(fields, "n", head), "n")),
                parse_int(require(fields, "m", head), "m"));
  }
  if (head == "Cn1") {
    const auto fields = parse_fields(parts, 1);
    return c_n1(static_cast<std::size_t>(parse_int(require(fields, "n", head), "n")),
                parse_int(require(fields, "m", head), "m"),
                parse_int(require(fields, "l", head), "l"));
  }
  if (head == "An2") {
    const auto fields = parse_fields(parts, 1);
    return a_n2(static_cast<std::size_t>(parse_int(require(fields, "n", head), "n")),
                parse_int(require(fields, "m", head), "m"));
  }
  if (head == "An2-restricted") {
    const auto fields = parse_fields(parts, 1);
    const std::size_t n = static_cast<std::size_t>(parse_int(require(fields, "n", head), "n"));
    const int m = parse_int(require(fields, "m", head), "m");
    return restrict_to_hyperplane(a_n2(n, m), an2_containing_hyperplane(n, m), tol);
  }
  if (head == "vee-An") {
    const auto fields = parse_fields(parts, 1);
    return vee_An_c(parse_double_list(require(fields, "c", head), "c"));
  }
  if (head == "vee-Bn") {
    const auto fields = parse_fields(parts, 1);
    return vee_Bn_c(parse_double(require(fields, "c0", head), "c0"),
                    parse_double_list(require(fields, "c", head), "c"));
  }
  if (head == "vee-A3") {
    const auto fields = parse_fields(parts, 1);
    const std::vector<double> values = parse_double_list(require(fields, "mu", head), "mu");
    if (values.size() != 6)
      throw BadParameter("catalog: vee-A3 needs 6 mu values (12,13,14,23,24,34)");
    std::array<cplx, 6> mu;
    for (std::size_t i = 0; i < 6; ++i) mu[i] = cplx{values[i], 0.0};
    return vee_A3_general(mu);
  }
  if (head == "vee-An2") {
    const auto fields = parse_fields(parts, 1);
    const std::size_t n = static_cast<std::size_t>(parse_int(require(fields, "n", head), "n"));
    const int m = parse_int(require(fields, "m", head), "m");
    return project_to_coordinate_zero(weighted_from_locus(a_n2(n, m)), n + 1, tol);
  }
  if (head.rfind("vee-", 0) == 0)
    return weighted_from_locus(make_locus_catalog(name.substr(4), tol));
  throw UnknownCatalogName("unknown catalog name: '" + name + "'");
}

Configuration make_locus_catalog(const std::string& name, const Tolerance& tol) {
  Configuration config = make_named(name, tol);
  if (config.kind != ConfigKind::locus)
    throw BadParameter("catalog: '" + name + "' is not a locus configuration");
  return config;
}

}  // namespace

Configuration make_catalog(const std::string& name, const Tolerance& tol) {
  if (name.empty()) throw UnknownCatalogName("empty catalog name");
  Configuration config = make_named(name, tol);
  config.label = name;
  return config;
}

std::vector<CatalogPattern> catalog_patterns() {
  return {
      {"A:<rank>:m=<int>", "Coxeter A positive roots e_i-e_j in (rank+1)-space"},
      {"B:<rank>:m=<k>,<m>", "Coxeter B: e_i+-e_j (mult k), e_i (mult m)"},
      {"C:<rank>:m=<k>,<m>", "Coxeter C: e_i+-e_j (mult k), 2e_i (mult m)"},
      {"D:<rank>:m=<int>", "Coxeter D: e_i+-e_j"},
      {"An1:n=<int>:m=<int>", "deformed A family in (n+1)-space, e_i - sqrt(m) e_{n+1}"},
      {"Cn1:n=<int>:m=<int>:l=<int>", "deformed C family, needs (2l+1) | (2m+1)"},
      {"An2:n=<int>:m=<int>", "two-deformation A family in (n+2)-space"},
      {"An2-restricted:n=<int>:m=<int>", "An2 restricted to its containing hyperplane"},
      {"vee-An:c=<f,...>", "n-parametric vee family sqrt(c_i c_j)(e_i-e_j), sqrt(c_i) e_i"},
      {"vee-Bn:c0=<f>:c=<f,...>", "B-type vee family"},
      {"vee-A3:mu=<6 floats>", "A3-type covectors mu_ij (e_i-e_j), order 12,13,14,23,24,34"},
      {"vee-An2:n=<int>:m=<int>", "weighted An2 projected to the last coordinate"},
      {"vee-<locus name>", "weighted system sqrt(m_a) alpha of any locus catalog entry"},
  };
}

}  // namespace veelocus
