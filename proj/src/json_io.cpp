#include "cyclosvp/json_io.hpp"

#include "cyclosvp/decimal.hpp"
#include "cyclosvp/error.hpp"

namespace cyclosvp {

namespace {

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json poly_json(const PolyModP& f) {
  Json out = Json::array();
  for (const Integer& c : f) out.push_back(to_json(c));
  return out;
}

}  // namespace

Json to_json(const Integer& x) { return x.str(); }

Integer integer_from_json(const Json& j) {
  if (!j.is_string()) throw DomainError("invalid_json", "integers are encoded as decimal strings");
  const std::string s = j.get<std::string>();
  const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
  if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
    throw DomainError("invalid_json", "not a decimal integer: " + s);
  }
  return Integer(s);
}

Json to_json(const RingElement& x) {
  Json coeffs = Json::array();
  for (int i = 0; i < x.degree(); ++i) coeffs.push_back(to_json(x[i]));
  return Json{{"ring", x.ring().name()}, {"coeffs", coeffs}};
}

RingElement ring_element_from_json(const Json& j) {
  const RingTag ring = RingTag::parse(j.at("ring").get<std::string>());
  const Json& coeffs = j.at("coeffs");
  IntVector v(static_cast<Eigen::Index>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) v(static_cast<Eigen::Index>(i)) = integer_from_json(coeffs[i]);
  return RingElement(ring, std::move(v));
}

Json to_json(const IntegerLattice& lattice) {
  Json out;
  out["ring"] = lattice.ring.name();
  out["p"] = lattice.ideal ? to_json(lattice.ideal->p) : Json(nullptr);
  out["r"] = lattice.ideal && lattice.ideal->r ? to_json(*lattice.ideal->r) : Json(nullptr);
  out["basis"] = matrix_json(lattice.basis);
  out["gram"] = matrix_json(lattice.gram);
  return out;
}

Json to_json(const ResidueClass& rc) {
  Json out;
  out["p"] = to_json(rc.p);
  out["primality"] = primality(rc.p) == Primality::Prime ? "prime" : "probable_prime";
  out["class_mod8"] = std::to_string(rc.class_mod8);
  out["class_mod16"] = std::to_string(rc.class_mod16);
  out["supported"] = rc.supported;
  out["covered_class"] = rc.covered_class();
  Json levels = Json::array();
  for (const SplittingLevel& s : rc.splitting) {
    levels.push_back(Json{{"field", s.field},
                          {"over", s.over},
                          {"degree", std::to_string(s.degree)},
                          {"primes", std::to_string(s.primes)},
                          {"residue_degree", std::to_string(s.residue_degree)},
                          {"behaviour", s.behaviour()},
                          {"relative", s.relative}});
  }
  out["splitting"] = levels;
  return out;
}

Json to_json(const SvpCertificate& cert) {
  Json out;
  out["vector"] = to_json(cert.vector);
  out["sq_length"] = to_json(cert.sq_length);
  out["method"] = to_string(cert.method);
  out["cross_checked"] = cert.cross_checked;
  return out;
}

Json to_json(const Lambda1Result& res) {
  Json out;
  out["p"] = to_json(res.p);
  out["n"] = std::to_string(res.n);
  out["class_mod16"] = std::to_string(res.residue_class.class_mod16);
  out["a_p"] = res.pell ? to_json(res.pell->a) : Json(nullptr);
  out["b_p"] = res.pell ? to_json(res.pell->b) : Json(nullptr);
  out["lambda1_squared"] = to_json(res.lambda1_sq);
  out["lambda1_decimal"] = decimal_root(res.lambda1_sq, 2);
  out["bound_new_decimal"] = decimal_root(res.bound_new_4th, 4);
  out["bound_minkowski_decimal"] =
      res.bound_minkowski_4th ? Json(decimal_root(*res.bound_minkowski_4th, 4)) : Json(nullptr);
  out["witness"] = to_json(res.witness.vector);
  out["method"] = to_string(res.witness.method);
  out["certified"] = res.certified;
  out["inert"] = res.inert;
  out["outside_formula"] = res.outside_formula;
  if (primality(res.p) != Primality::Prime) out["primality"] = "probable_prime";
  return out;
}

Json to_json(const Bounds& b) {
  Json out;
  out["p"] = to_json(b.p);
  out["n"] = std::to_string(b.n);
  out["lambda1_squared"] = to_json(b.lambda1_sq);
  out["new_bound_radicand"] = to_json(b.new_bound_4th);
  out["minkowski_radicand"] = to_json(b.minkowski_4th);
  out["lambda1_decimal"] = b.lambda1_decimal;
  out["bound_new_decimal"] = b.new_bound_decimal;
  out["bound_minkowski_decimal"] = b.minkowski_decimal;
  out["chain_holds"] = b.chain_holds;
  return out;
}

Json to_json(const SvsgReport& report) {
  Json out;
  out["ring"] = report.ring.name();
  out["norm_bound"] = to_json(report.norm_bound);
  Json ideals = Json::array();
  for (const SvsgEntry& e : report.entries) {
    Json row;
    row["p"] = to_json(e.p);
    row["factor"] = poly_json(e.factor);
    row["norm"] = to_json(e.norm);
    row["lambda1_squared"] = to_json(e.enumeration_sq);
    row["generator_sq_length"] = to_json(e.generator_sq);
    row["generator"] = to_json(e.generator);
    row["formula"] = e.formula_sq ? to_json(*e.formula_sq) : Json(nullptr);
    row["pass"] = e.pass;
    ideals.push_back(std::move(row));
  }
  out["ideals"] = ideals;
  out["mismatches"] = std::to_string(report.mismatches);
  out["pass"] = report.mismatches == 0;
  return out;
}

Json to_json(const Zeta16LiftReport& r) {
  Json out;
  out["p"] = to_json(r.p);
  out["r"] = to_json(r.r);
  out["a_p"] = to_json(r.a_p);
  out["subfield_sq_length"] = to_json(r.subfield_sq);
  out["extension_sq_length"] = to_json(r.extension_sq);
  out["subfield_witness"] = to_json(r.subfield_witness);
  out["lifted_witness"] = to_json(r.lifted_witness);
  out["ratio_ok"] = r.ratio_ok;
  out["witness_ok"] = r.witness_ok;
  out["formula_ok"] = r.formula_ok;
  out["pass"] = r.pass;
  return out;
}

Json error_json(const Error& e) {
  Json out;
  out["error"] = e.code();
  for (const auto& [key, value] : e.details()) out[key] = value;
  return out;
}

}  // namespace cyclosvp
