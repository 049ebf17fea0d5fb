#ifndef HURWITZ_JSON_IO_HPP
#define HURWITZ_JSON_IO_HPP

#include <vector>

#include <json.hpp>

#include "hurwitz/certificate.hpp"
#include "hurwitz/galois.hpp"
#include "hurwitz/gaussian.hpp"
#include "hurwitz/lattice_cover.hpp"
#include "hurwitz/pqr.hpp"
#include "hurwitz/search.hpp"
#include "hurwitz/survey.hpp"

namespace hurwitz
{

using json = nlohmann::json;

// "report.group_order" is 0 when the closure cap was exceeded.
json certificate_to_json(CoverCertificate const &c, VerificationReport const &r);

struct CertificateRecord
{
  CoverCertificate certificate;
  VerificationReport report;
};

// Throws std::invalid_argument (or json exceptions) on schema violations.
CertificateRecord certificate_from_json(json const &j);

json residues_to_json(ResidueSystem const &r);

// {"re": "p/q", "im": "r/s"}
json scalar_to_json(QiScalar const &c);
QiScalar scalar_from_json(json const &j);
// Coefficient array, constant term first.
json poly_to_json(PolyQi const &p);
PolyQi poly_from_json(json const &j);

json pqr_report_to_json(PqrReport const &r);
json triple_to_json(TriplePQR const &T);
TriplePQR triple_from_json(json const &j);

json search_outcome_to_json(std::size_t d, SearchOutcome const &o);
json galois_report_to_json(GaloisReport const &r);
json survey_to_json(std::vector<SurveyRow> const &rows);

} // namespace hurwitz

#endif
