#include "hurwitz/json_io.hpp"

namespace hurwitz
{

namespace
{

json perm_to_json(Perm const &p)
{
  return json(std::vector<Perm::point_type>(p.images().begin(), p.images().end()));
}

Perm perm_from_json(json const &j)
{
  return Perm(j.get<std::vector<Perm::point_type>>());
}

} // namespace

json certificate_to_json(CoverCertificate const &c, VerificationReport const &r)
{
  return {
      {"d", c.d()},
      {"k", c.k()},
      {"sigma0", perm_to_json(c.sigma0())},
      {"sigma1", perm_to_json(c.sigma1())},
      {"sigmaInf", perm_to_json(c.sigma_inf())},
      {"provenance", std::string(to_string(c.provenance()))},
      {"report",
       {{"product", r.product},
        {"types", r.types},
        {"transitive", r.transitive},
        {"riemann_hurwitz", r.riemann_hurwitz},
        {"group_order", r.group_order.value_or(0)}}},
  };
}

CertificateRecord certificate_from_json(json const &j)
{
  CoverCertificate c(perm_from_json(j.at("sigma0")), perm_from_json(j.at("sigma1")),
                     perm_from_json(j.at("sigmaInf")),
                     parse_provenance(j.at("provenance").get<std::string>()));
  if (j.at("d").get<std::size_t>() != c.d() || j.at("k").get<std::size_t>() != c.k())
    throw std::invalid_argument("certificate: d or k disagrees with the permutations");

  auto const &rep = j.at("report");
  VerificationReport r;
  r.product = rep.at("product").get<bool>();
  r.types = rep.at("types").get<bool>();
  r.transitive = rep.at("transitive").get<bool>();
  r.riemann_hurwitz = rep.at("riemann_hurwitz").get<bool>();
  auto const order = rep.at("group_order").get<std::size_t>();
  if (order != 0)
    r.group_order = order;
  return {std::move(c), r};
}

json residues_to_json(ResidueSystem const &r)
{
  json out = json::array();
  for (auto const &z : r.reps())
    out.push_back(to_string(z));
  return out;
}

json scalar_to_json(QiScalar const &c)
{
  return {{"re", c.re().get_str()}, {"im", c.im().get_str()}};
}

QiScalar scalar_from_json(json const &j)
{
  return {parse_rational(j.at("re").get<std::string>()),
          parse_rational(j.at("im").get<std::string>())};
}

json poly_to_json(PolyQi const &p)
{
  json out = json::array();
  for (auto const &c : p.coeffs())
    out.push_back(scalar_to_json(c));
  return out;
}

PolyQi poly_from_json(json const &j)
{
  std::vector<QiScalar> coeffs;
  for (auto const &c : j)
    coeffs.push_back(scalar_from_json(c));
  PolyQi p(std::move(coeffs));
  if (p.coeffs().size() != j.size())
    throw std::invalid_argument("polynomial: trailing zero coefficients");
  return p;
}

json pqr_report_to_json(PqrReport const &r)
{
  return {
      {"identity", r.identity},
      {"squarefree", r.squarefree},
      {"coprime", r.coprime},
      {"degrees", r.degrees},
      {"extremal", r.extremal},
      {"max_term_degree", r.max_term_degree},
      {"distinct_roots", r.distinct_roots},
  };
}

json triple_to_json(TriplePQR const &T)
{
  return {
      {"k", T.k},
      {"P", poly_to_json(T.P)},
      {"Q", poly_to_json(T.Q)},
      {"R", poly_to_json(T.R)},
      {"cP", scalar_to_json(T.cP)},
      {"cQ", scalar_to_json(T.cQ)},
  };
}

TriplePQR triple_from_json(json const &j)
{
  TriplePQR T;
  T.k = j.at("k").get<std::size_t>();
  T.P = poly_from_json(j.at("P"));
  T.Q = poly_from_json(j.at("Q"));
  T.R = poly_from_json(j.at("R"));
  T.cP = scalar_from_json(j.at("cP"));
  T.cQ = scalar_from_json(j.at("cQ"));
  return T;
}

json search_outcome_to_json(std::size_t d, SearchOutcome const &o)
{
  json out = {
      {"d", d},
      {"status", std::string(to_string(o.status))},
      {"nodes_explored", o.nodes_explored},
      {"elapsed_ms", std::chrono::duration<double, std::milli>(o.elapsed).count()},
  };
  if (o.certificate)
    out["certificate"] = certificate_to_json(*o.certificate, verify_certificate(*o.certificate));
  return out;
}

json galois_report_to_json(GaloisReport const &r)
{
  return {
      {"d", r.d},
      {"group_order", r.group_order},
      {"translation_order", r.translation_order},
      {"gamma_is_delta_translation", r.gamma_is_delta_translation},
      {"gamma_central", r.gamma_central},
      {"translations_match", r.translations_match},
      {"linear_part_surjective", r.linear_part_surjective},
      {"kernel_is_translations", r.kernel_is_translations},
      {"quotient_order", r.quotient_order},
      {"lattice_group_order", r.lattice_group_order.value_or(0)},
      {"quotient_matches_lattice", r.quotient_matches_lattice},
  };
}

json survey_to_json(std::vector<SurveyRow> const &rows)
{
  json out = json::array();
  for (auto const &row : rows) {
    json reps = json::array();
    for (auto const &[x, y] : row.representations)
      reps.push_back({x, y});
    out.push_back({
        {"d", row.d},
        {"representations", reps},
        {"lattice", std::string(to_string(row.lattice))},
        {"prime", std::string(to_string(row.prime))},
        {"search", row.search ? json(std::string(to_string(*row.search))) : json("skipped")},
        {"inconsistencies", row.inconsistencies},
    });
  }
  return out;
}

} // namespace hurwitz
