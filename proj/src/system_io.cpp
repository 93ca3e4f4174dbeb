#include "stabpoly/system_io.hpp"

#include <stdexcept>

namespace stabpoly {

namespace {

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.get<std::int64_t>()));
  if (!j.is_string()) throw DomainError("rational entries must be \"p/q\" strings");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw DomainError(e.what());
  }
}

}  // namespace

nlohmann::json to_json(const RationalVector& x) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) out.push_back(to_string(x(i)));
  return out;
}

RationalVector vector_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw DomainError("expected an array of rationals");
  RationalVector x(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) x(static_cast<Eigen::Index>(i)) = rational_from_json(j[i]);
  return x;
}

nlohmann::json to_json(const Inequality& row) {
  return {{"coeffs", to_json(row.coeffs)},
          {"rhs", to_string(row.rhs)},
          {"kind", row.kind == Inequality::Kind::Nonnegativity ? "nonnegativity" : "facet"}};
}

Inequality inequality_from_json(const nlohmann::json& j) {
  try {
    Inequality row;
    row.coeffs = vector_from_json(j.at("coeffs"));
    row.rhs = rational_from_json(j.at("rhs"));
    const std::string kind = j.value("kind", "facet");
    if (kind == "nonnegativity") {
      row.kind = Inequality::Kind::Nonnegativity;
    } else if (kind == "facet") {
      row.kind = Inequality::Kind::Facet;
    } else {
      throw DomainError("unknown row kind '" + kind + "'");
    }
    if (row.support() == 0) throw DomainError("row with all coefficients zero");
    return row;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("inequality JSON: ") + e.what());
  }
}

nlohmann::json to_json(const LinearSystem& sys) {
  nlohmann::json rows = nlohmann::json::array();
  for (const Inequality& r : sys.rows) rows.push_back(to_json(r));
  return {{"n", sys.n}, {"rows", rows}};
}

LinearSystem system_from_json(const nlohmann::json& j) {
  try {
    LinearSystem sys;
    sys.n = j.at("n").get<int>();
    for (const auto& r : j.at("rows")) {
      sys.rows.push_back(inequality_from_json(r));
      if (sys.rows.back().size() != sys.n) throw DomainError("row length differs from n");
    }
    return sys;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("system JSON: ") + e.what());
  }
}

}  // namespace stabpoly
