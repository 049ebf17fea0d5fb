#include "hurwitz/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <CLI11.hpp>

#include "hurwitz/prime_cover.hpp"

namespace hurwitz::cli
{

int exit_code_for_status(std::string_view status)
{
  if (status == "representable" || status == "valid" || status == "Found" ||
      status == "verified" || status == "consistent")
    return exit_code::ok;
  if (status == "not_representable" || status == "Exhausted")
    return exit_code::negative;
  if (status == "BudgetExceeded")
    return exit_code::budget;
  return exit_code::failure;
}

namespace
{

class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

CommandResult finish(json payload, std::string text, bool as_json)
{
  CommandResult r;
  r.exit_code = exit_code_for_status(payload.at("status").get<std::string>());
  r.payload = std::move(payload);
  r.text = std::move(text);
  r.json_output = as_json;
  return r;
}

std::string flag(bool b)
{
  return b ? "pass" : "FAIL";
}

std::string describe_certificate(CoverCertificate const &c, VerificationReport const &r)
{
  std::ostringstream os;
  os << "degree d = " << c.d() << " (k = " << c.k() << "), provenance "
     << to_string(c.provenance()) << "\n"
     << "  sigma0   = " << c.sigma0() << "  type " << cycle_type(c.sigma0()) << "\n"
     << "  sigma1   = " << c.sigma1() << "  type " << cycle_type(c.sigma1()) << "\n"
     << "  sigmaInf = " << c.sigma_inf() << "  type " << cycle_type(c.sigma_inf()) << "\n"
     << "  (i) product        " << flag(r.product) << "\n"
     << "  (ii) cycle types   " << flag(r.types) << "\n"
     << "  (iii) transitive   " << flag(r.transitive) << "\n"
     << "  (iv) genus 0       " << flag(r.riemann_hurwitz) << "\n"
     << "  group order        ";
  if (r.group_order)
    os << *r.group_order << (r.order_is_4d(c.d())           ? " (= 4d)"
           : r.order_as_expected(c.d()) ? " (trivial, d = 1)"
                                       : " (!= 4d)");
  else
    os << "above cap";
  os << "\n";
  return os.str();
}

void require_odd_norm(long a, long b)
{
  if (a == 0 && b == 0)
    throw UsageError("a + bi must be nonzero");
  if ((a * a + b * b) % 2 == 0)
    throw UsageError("a^2 + b^2 must be odd");
}

void require_bounded(long a, long b, long limit)
{
  if (a < -limit || a > limit || b < -limit || b > limit)
    throw UsageError("|a|, |b| must not exceed " + std::to_string(limit));
}

CommandResult cmd_check(std::uint64_t d, bool as_json)
{
  auto const reps = sum_two_squares(d);
  json list = json::array();
  for (auto const &[x, y] : reps)
    list.push_back({x, y});
  json payload = {{"d", d},
                  {"representations", list},
                  {"status", reps.empty() ? "not_representable" : "representable"}};
  std::ostringstream os;
  if (reps.empty())
    os << d << " is not a sum of two squares\n";
  for (auto const &[x, y] : reps)
    os << d << " = " << x << "^2 + " << y << "^2\n";
  return finish(std::move(payload), os.str(), as_json);
}

CommandResult cmd_prime_cover(std::uint64_t p, bool as_json)
{
  if (p >= (1ull << 31))
    throw UsageError("p must be below 2^31");
  PrimeCover cover = [&] {
    try {
      return build_prime_cover(p);
    } catch (NotPrime const &e) {
      throw UsageError(e.what());
    } catch (WrongResidueClass const &e) {
      throw UsageError(e.what());
    }
  }();
  auto const report = verify_certificate(cover.certificate);
  auto payload = certificate_to_json(cover.certificate, report);
  payload["ell"] = cover.params.ell;
  payload["status"] = report.valid() ? "valid" : "invalid";
  auto text = "ell = " + std::to_string(cover.params.ell) + "\n" +
              describe_certificate(cover.certificate, report);
  return finish(std::move(payload), std::move(text), as_json);
}

CommandResult cmd_lattice_cover(long a, long b, bool as_json)
{
  require_bounded(a, b, 2000);
  require_odd_norm(a, b);
  auto const cover = build_lattice_cover(a, b);
  auto const report = verify_certificate(cover.certificate);
  auto payload = certificate_to_json(cover.certificate, report);
  payload["a"] = a;
  payload["b"] = b;
  payload["residues"] = residues_to_json(cover.residues);
  payload["status"] = report.valid() ? "valid" : "invalid";
  return finish(std::move(payload), describe_certificate(cover.certificate, report),
                as_json);
}

CommandResult cmd_search(std::uint64_t d, std::uint64_t budget, unsigned workers,
                         bool as_json)
{
  if (d == 0 || d % 4 != 1)
    throw UsageError("d must be 1 mod 4");
  auto const outcome = search_cover(d, {budget, workers});
  auto payload = search_outcome_to_json(d, outcome);
  std::ostringstream os;
  os << "d = " << d << ": " << to_string(outcome.status) << " after "
     << outcome.nodes_explored << " nodes ("
     << std::chrono::duration<double>(outcome.elapsed).count() << " s)\n";
  if (outcome.certificate)
    os << describe_certificate(*outcome.certificate,
                               verify_certificate(*outcome.certificate));
  return finish(std::move(payload), os.str(), as_json);
}

CommandResult cmd_pqr(long a, long b, bool as_json)
{
  require_bounded(a, b, 10);
  require_odd_norm(a, b);
  auto const data = build_cover_map(a, b);
  auto const report = verify_pqr(data.triple);
  auto const error = numeric_crosscheck(data, 5);

  json payload = {
      {"a", a},
      {"b", b},
      {"d", data.d},
      {"k", data.k},
      {"P", poly_to_json(data.triple.P)},
      {"Q", poly_to_json(data.triple.Q)},
      {"R", poly_to_json(data.triple.R)},
      {"cP", scalar_to_json(data.triple.cP)},
      {"cQ", scalar_to_json(data.triple.cQ)},
      {"checks", pqr_report_to_json(report)},
      {"crosscheck_error", error},
  };
  bool const ok = report.all() && error < crosscheck_tolerance;
  payload["status"] = ok ? "verified" : "failed";

  std::ostringstream os;
  os << "d = " << data.d << ", k = " << data.k << "\n"
     << "  P  = " << data.triple.P << "\n"
     << "  Q  = " << data.triple.Q << "\n"
     << "  R  = " << data.triple.R << "\n"
     << "  cP = " << data.triple.cP << ", cQ = " << data.triple.cQ << "\n"
     << "  degrees (" << data.triple.P.degree() << "," << data.triple.Q.degree() << ","
     << data.triple.R.degree() << ")\n"
     << "  identity " << flag(report.identity) << ", squarefree " << flag(report.squarefree)
     << ", coprime " << flag(report.coprime) << ", degrees " << flag(report.degrees)
     << ", extremal " << flag(report.extremal) << " (" << report.max_term_degree
     << " = " << report.distinct_roots << " - 1)\n"
     << "  numeric crosscheck error " << error << "\n";
  return finish(std::move(payload), os.str(), as_json);
}

CommandResult cmd_galois(long a, long b, bool as_json)
{
  require_bounded(a, b, 40);
  require_odd_norm(a, b);
  auto const r = structure_checks(a, b);
  auto payload = galois_report_to_json(r);
  payload["a"] = a;
  payload["b"] = b;
  payload["status"] = r.all() ? "verified" : "failed";

  std::ostringstream os;
  os << "d = " << r.d << "\n"
     << "  |Gamma|                 " << r.group_order << " (8d = " << 8 * r.d << ")\n"
     << "  translation subgroup    " << r.translation_order << " (2d = " << 2 * r.d << ")\n"
     << "  gamma central           " << flag(r.gamma_central) << "\n"
     << "  |Gamma/<gamma>|         " << r.quotient_order << " (4d = " << 4 * r.d << ")\n"
     << "  lattice group order     " << r.lattice_group_order.value_or(0)
     << (!r.quotient_matches_lattice ? " (MISMATCH)"
         : r.d == 1               ? " (trivial action, d = 1)"
                                  : " (matches)") << "\n";
  return finish(std::move(payload), os.str(), as_json);
}

CommandResult cmd_survey(std::uint64_t dmin, std::uint64_t dmax, std::uint64_t cap,
                         unsigned workers, bool as_json)
{
  if (dmin > dmax)
    throw UsageError("dmin must not exceed dmax");
  if (dmax > 100000)
    throw UsageError("dmax must not exceed 100000");
  auto const rows = survey(dmin, dmax, cap, {default_search_budget, workers});
  std::size_t bad = 0;
  std::ostringstream os;
  os << "     d  repr        lattice        prime          search          ok\n";
  for (auto const &row : rows) {
    std::string repr = "-";
    if (row.representable())
      repr = "(" + std::to_string(row.representations.front().first) + "," +
             std::to_string(row.representations.front().second) + ")";
    char line[160];
    std::snprintf(line, sizeof line, "%6llu  %-10s  %-13s  %-13s  %-14s  %s\n",
                  static_cast<unsigned long long>(row.d), repr.c_str(),
                  std::string(to_string(row.lattice)).c_str(),
                  std::string(to_string(row.prime)).c_str(),
                  row.search ? std::string(to_string(*row.search)).c_str() : "skipped",
                  row.consistent() ? "yes" : "NO");
    os << line;
    for (auto const &msg : row.inconsistencies)
      os << "        ! " << msg << "\n";
    bad += row.inconsistencies.size();
  }
  os << bad << " inconsistencies\n";
  json payload = {{"dmin", dmin},
                  {"dmax", dmax},
                  {"search_cap", cap},
                  {"rows", survey_to_json(rows)},
                  {"inconsistencies", bad},
                  {"status", bad == 0 ? "consistent" : "inconsistent"}};
  return finish(std::move(payload), os.str(), as_json);
}

} // namespace

CommandResult run(std::vector<std::string> const &argv)
{
  CLI::App app{"Branched covers of type (1,4,...,4), (1,4,...,4), (1,2,...,2) "
               "and sums of two squares",
               argv.empty() ? "hurwitz" : argv.front()};
  app.require_subcommand(1);
  bool as_json = false;

  std::uint64_t d = 0, p = 0, dmin = 0, dmax = 0;
  long a = 0, b = 0;
  std::uint64_t budget = default_search_budget;
  unsigned workers = 1;
  std::uint64_t cap = default_survey_search_cap;

  auto *check = app.add_subcommand("check", "two-squares representations of d");
  check->add_option("d", d)->required();
  check->add_flag("--json", as_json);

  auto *prime = app.add_subcommand("prime-cover", "affine construction over F_p");
  prime->add_option("p", p)->required();
  prime->add_flag("--json", as_json);

  auto *lattice = app.add_subcommand("lattice-cover", "coset action mod (a + bi)");
  lattice->add_option("a", a)->required();
  lattice->add_option("b", b)->required();
  lattice->add_flag("--json", as_json);

  auto *search = app.add_subcommand("search", "exhaustive search for a triple");
  search->add_option("d", d)->required();
  search->add_option("--budget", budget, "node limit");
  search->add_option("--parallel", workers, "worker threads")->check(CLI::Range(1u, 256u));
  search->add_flag("--json", as_json);

  auto *pqr = app.add_subcommand("pqr", "polynomials P, Q, R from multiplication by a + bi");
  pqr->add_option("a", a)->required();
  pqr->add_option("b", b)->required();
  pqr->add_flag("--json", as_json);

  auto *galois = app.add_subcommand("galois", "structure of the order-8d group");
  galois->add_option("a", a)->required();
  galois->add_option("b", b)->required();
  galois->add_flag("--json", as_json);

  auto *surv = app.add_subcommand("survey", "cross-check every construction on a range");
  surv->add_option("dmin", dmin)->required();
  surv->add_option("dmax", dmax)->required();
  surv->add_option("--search-cap", cap, "largest d handed to the search");
  surv->add_option("--parallel", workers, "worker threads")->check(CLI::Range(1u, 256u));
  surv->add_flag("--json", as_json);

  std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
  std::reverse(args.begin(), args.end());

  CommandResult usage;
  usage.exit_code = exit_code::usage;
  try {
    app.parse(args);
  } catch (CLI::CallForHelp const &) {
    usage.exit_code = exit_code::ok;
    usage.text = app.help();
    return usage;
  } catch (CLI::ParseError const &e) {
    usage.text = std::string(e.what()) + "\n" + app.help();
    return usage;
  }

  try {
    if (check->parsed())
      return cmd_check(d, as_json);
    if (prime->parsed())
      return cmd_prime_cover(p, as_json);
    if (lattice->parsed())
      return cmd_lattice_cover(a, b, as_json);
    if (search->parsed())
      return cmd_search(d, budget, workers, as_json);
    if (pqr->parsed())
      return cmd_pqr(a, b, as_json);
    if (galois->parsed())
      return cmd_galois(a, b, as_json);
    if (surv->parsed())
      return cmd_survey(dmin, dmax, cap, workers, as_json);
  } catch (UsageError const &e) {
    usage.text = std::string("error: ") + e.what() + "\n";
    return usage;
  }
  usage.text = app.help();
  return usage;
}

} // namespace hurwitz::cli
