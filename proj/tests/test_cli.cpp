#include <doctest.h>

#include "hurwitz/cli.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/pqr.hpp"
#include "hurwitz/prime_cover.hpp"

using namespace hurwitz;

namespace
{

cli::CommandResult run(std::vector<std::string> args)
{
  args.insert(args.begin(), "hurwitz");
  return cli::run(args);
}

void check_status_matches(cli::CommandResult const &r)
{
  REQUIRE(r.payload.is_object());
  REQUIRE(r.payload.contains("status"));
  CHECK(cli::exit_code_for_status(r.payload["status"].get<std::string>()) == r.exit_code);
}

// Parsing the certificate part and emitting it again reproduces it.
void check_certificate_round_trip(json const &payload)
{
  auto const record = certificate_from_json(payload);
  auto const again = certificate_to_json(record.certificate, record.report);
  for (auto const &[key, value] : again.items())
    CHECK(payload.at(key) == value);
  auto const twice = certificate_from_json(again);
  CHECK(twice.certificate == record.certificate);
  CHECK(twice.report == record.report);
}

} // namespace

TEST_CASE("check")
{
  auto const r = run({"check", "21"});
  CHECK(r.exit_code == 3);
  CHECK(r.payload["d"] == 21);
  CHECK(r.payload["representations"] == json::array());
  check_status_matches(r);

  auto const ok = run({"check", "25", "--json"});
  CHECK(ok.exit_code == 0);
  CHECK(ok.json_output);
  CHECK(ok.payload["representations"] == json::parse("[[4,3],[5,0]]"));
  check_status_matches(ok);
}

TEST_CASE("prime-cover")
{
  auto const r = run({"prime-cover", "13", "--json"});
  CHECK(r.exit_code == 0);
  CHECK(r.payload["provenance"] == "Prime");
  CHECK(r.payload["ell"] == 5);
  CHECK(r.payload["report"]["group_order"] == 52);
  check_status_matches(r);
  check_certificate_round_trip(r.payload);
  auto const cert = certificate_from_json(r.payload).certificate;
  CHECK(cert == build_prime_cover(13).certificate);
  CHECK(verify_certificate(cert).valid());

  CHECK(run({"prime-cover", "7"}).exit_code == 64);
  CHECK(run({"prime-cover", "21"}).exit_code == 64);
}

TEST_CASE("lattice-cover")
{
  auto const r = run({"lattice-cover", "2", "1", "--json"});
  CHECK(r.exit_code == 0);
  CHECK(r.payload["residues"] == json::parse(R"(["0+0i","1+0i","2+0i","3+0i","4+0i"])"));
  check_status_matches(r);
  check_certificate_round_trip(r.payload);
  CHECK(run({"lattice-cover", "1", "1"}).exit_code == 64);
  CHECK(run({"lattice-cover", "0", "0"}).exit_code == 64);
  CHECK(run({"lattice-cover", "-3", "2"}).exit_code == 0);
}

TEST_CASE("search")
{
  auto const found = run({"search", "13", "--json"});
  CHECK(found.exit_code == 0);
  check_status_matches(found);
  check_certificate_round_trip(found.payload["certificate"]);
  CHECK(parse_search_status(found.payload["status"].get<std::string>()) == SearchStatus::Found);

  auto const none = run({"search", "21", "--parallel", "2"});
  CHECK(none.exit_code == 3);
  check_status_matches(none);
  CHECK_FALSE(none.payload.contains("certificate"));

  auto const budget = run({"search", "21", "--budget", "100"});
  CHECK(budget.exit_code == 4);
  check_status_matches(budget);

  CHECK(run({"search", "7"}).exit_code == 64);
}

TEST_CASE("pqr")
{
  auto const r = run({"pqr", "2", "1"});
  CHECK(r.exit_code == 0);
  check_status_matches(r);
  CHECK(r.payload["d"] == 5);
  CHECK(r.payload["k"] == 1);
  CHECK(r.payload["P"].size() == 2);
  CHECK(r.payload["Q"].size() == 2);
  CHECK(r.payload["R"].size() == 3);
  CHECK(r.payload["checks"]["identity"] == true);
  CHECK(r.payload["crosscheck_error"].get<double>() < crosscheck_tolerance);
  CHECK_FALSE(r.text.empty());

  auto const T = triple_from_json(r.payload);
  CHECK(T == build_cover_map(2, 1).triple);
  auto const again = triple_to_json(T);
  for (auto const &[key, value] : again.items())
    CHECK(r.payload.at(key) == value);
  CHECK(triple_from_json(again) == T);

  CHECK(run({"pqr", "1", "1"}).exit_code == 64);
}

TEST_CASE("galois")
{
  auto const r = run({"galois", "3", "2", "--json"});
  CHECK(r.exit_code == 0);
  check_status_matches(r);
  CHECK(r.payload["group_order"] == 104);
  CHECK(r.payload["translation_order"] == 26);
  CHECK(r.payload["quotient_order"] == 52);
  CHECK(r.payload["lattice_group_order"] == 52);
  CHECK(run({"galois", "2", "2"}).exit_code == 64);
}

TEST_CASE("survey")
{
  auto const r = run({"survey", "1", "40", "--json"});
  CHECK(r.exit_code == 0);
  check_status_matches(r);
  CHECK(r.payload["inconsistencies"] == 0);
  auto const &rows = r.payload["rows"];
  REQUIRE(rows.size() == 10);
  auto const &d13 = rows[3];
  CHECK(d13["d"] == 13);
  CHECK(d13["representations"] == json::parse("[[3,2]]"));
  CHECK(d13["lattice"] == "found");
  CHECK(d13["prime"] == "found");
  CHECK(d13["search"] == "Found");
  auto const &d21 = rows[5];
  CHECK(d21["representations"] == json::array());
  CHECK(d21["lattice"] == "not_attempted");
  CHECK(d21["search"] == "Exhausted");
  CHECK(d21["inconsistencies"] == json::array());
  auto const &d33 = rows[8];
  CHECK(d33["d"] == 33);
  CHECK(d33["search"] == "skipped");

  CHECK(run({"survey", "10", "1"}).exit_code == 64);
}

TEST_CASE("usage errors")
{
  CHECK(run({}).exit_code == 64);
  CHECK(run({"frobnicate"}).exit_code == 64);
  CHECK(run({"check"}).exit_code == 64);
  CHECK(run({"check", "abc"}).exit_code == 64);
  CHECK(run({"check", "5", "6"}).exit_code == 64);
  auto const help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK_FALSE(help.text.empty());
}

TEST_CASE("exit codes by status")
{
  CHECK(cli::exit_code_for_status("Found") == 0);
  CHECK(cli::exit_code_for_status("valid") == 0);
  CHECK(cli::exit_code_for_status("not_representable") == 3);
  CHECK(cli::exit_code_for_status("Exhausted") == 3);
  CHECK(cli::exit_code_for_status("BudgetExceeded") == 4);
  CHECK(cli::exit_code_for_status("invalid") == 1);
}

TEST_CASE("json text emit, parse, emit is a fixed point")
{
  for (auto const &args : std::vector<std::vector<std::string>>{
           {"check", "25"}, {"prime-cover", "17"}, {"lattice-cover", "3", "0"},
           {"search", "9"}, {"pqr", "3", "2"}, {"galois", "2", "1"}, {"survey", "1", "21"}}) {
    auto const r = run(args);
    auto const text = r.payload.dump();
    CHECK(json::parse(text).dump() == text);
  }
  auto const scalar = QiScalar(make_rational(-3, 25), make_rational(4, 25));
  CHECK(scalar_from_json(scalar_to_json(scalar)) == scalar);
  auto const poly = PolyQi{scalar, QiScalar(0), QiScalar(7, -2)};
  CHECK(poly_from_json(poly_to_json(poly)) == poly);
  CHECK_THROWS(certificate_from_json(json::parse(R"({"d":5})")));
}
