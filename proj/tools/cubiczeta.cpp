#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cubiczeta/criterion.hpp"
#include "cubiczeta/dedekind.hpp"
#include "cubiczeta/oracles.hpp"
#include "cubiczeta/partial_zeta.hpp"
#include "cubiczeta/report.hpp"
#include "cubiczeta/siegel.hpp"

using namespace cz;

namespace {

std::pair<long, long> parse_range(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos)
    throw error("range must look like A..B, got '" + s + "'");
  long lo = std::stol(s.substr(0, pos));
  long hi = std::stol(s.substr(pos + 2));
  if (lo > hi) throw error("empty range " + s);
  return {lo, hi};
}

std::vector<long> parse_longs(const std::string& s, size_t want,
                              const char* what) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  if (out.size() != want)
    throw error(std::string(what) + " needs " + std::to_string(want) +
                " comma-separated integers");
  return out;
}

void run_fields_validate(const std::string& range) {
  auto [lo, hi] = parse_range(range);
  std::cout << std::left << std::setw(5) << "m" << std::setw(10) << "validity"
            << std::setw(16) << "D" << "note\n";
  for (long m = lo; m <= hi; ++m) {
    ValidityReport v = validate_m(m);
    std::string d = m >= 4 ? int_str(FieldSpec(m).disc()) : "-";
    std::cout << std::left << std::setw(5) << m << std::setw(10)
              << validity_str(v.kind) << std::setw(16) << d
              << (v.ok() ? "-" : v.reason) << "\n";
  }
}

void run_zeta_hp(long m, const std::string& term, long bits) {
  PrecisionSchedule sched = PrecisionSchedule::from_env();
  if (bits > 0) {
    sched.start = bits;
    if (sched.cap < bits) sched.cap = bits;
  }
  FieldSpec spec(m);
  PartialZetaEngine eng(spec, Labeling{}, sched);
  if (term == "M1") {
    std::cout << "M(2,1) = " << qpid_str(eng.m_term(2, 1)) << "\n";
  } else if (term == "M2") {
    std::cout << "M(2,2) = " << qpid_str(eng.m_term(2, 2)) << "\n";
  } else if (term == "C1") {
    std::cout << "C(2,1) = " << qpid_str(eng.c_term(2, 1)) << "\n";
  } else if (term == "C2") {
    std::cout << "C(2,2) = " << qpid_str(eng.c_term(2, 2)) << "\n";
  } else {
    QPiD z2 = eng.partial_zeta_2();
    std::cout << "zeta_K(2,P) = " << qpid_str(z2) << "\n";
    std::cout << "zeta_K(-1,P) = " << rat_str(reflect_to_minus1(z2)) << "\n";
  }
}

void run_zeta_siegel(long m, bool list) {
  FieldSpec spec(m);
  SiegelReport rep = siegel_report(spec);
  if (list) {
    for (const auto& e : rep.elements)
      std::cout << "nu = (1," << e.b << "," << e.c << ")  N((nu)D_K) = "
                << int_str(e.norm) << "  sigma1 = " << int_str(e.sigma)
                << "  " << (e.prime ? "prime" : "composite") << "\n";
  }
  std::cout << "|S1| = " << rep.elements.size() << "\n";
  std::cout << "sum sigma1 = " << int_str(rep.sigma_total) << "\n";
  std::cout << "zeta_K(-1) = " << rat_str(rep.zeta_minus1) << "\n";
}

void run_zeta_euler(long m, uint64_t bound) {
  FieldSpec spec(m);
  EulerTruncation tr = euler_zeta2(spec, bound);
  std::cout << "zeta_K(2) = " << tr.value.str(20) << "\n";
  std::cout << "primes used = " << tr.terms_used << "\n";
}

void run_criterion(const std::string& range, const std::string& format) {
  auto [lo, hi] = parse_range(range);
  auto reports = criterion_sweep(lo, hi);
  if (format == "csv")
    std::cout << criterion_csv(reports);
  else if (format == "json")
    std::cout << criterion_json(reports);
  else
    std::cout << criterion_table(reports);
}

void run_classnumber(long m, uint64_t bound) {
  FieldSpec spec(m);
  ClassNumberEstimate est = analytic_class_number(spec, bound);
  std::cout << "h estimate = " << est.estimate.str(12) << "\n";
  std::cout << "h = " << est.rounded << "\n";
}

void run_dedekind_sum(const std::string& matrix, const std::string& degrees,
                      bool reduced) {
  auto a = parse_longs(matrix, 9, "--matrix");
  auto r = parse_longs(degrees, 3, "--r");
  IMat3 A;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) A[i][j] = Int(a[3 * i + j]);
  std::array<long, 3> rr{r[0], r[1], r[2]};
  Rat v = reduced ? dedekind_sum_reduced(A, rr) : dedekind_sum_direct(A, rr);
  std::cout << rat_str(v) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Dedekind zeta values and the class-number-one criterion "
               "for the cubic family K_m"};
  app.require_subcommand(1);

  auto* fields = app.add_subcommand("fields", "field family inspection");
  fields->require_subcommand(1);
  auto* validate = fields->add_subcommand("validate", "validity cases over an m range");
  std::string validate_range;
  validate->add_option("--m-range", validate_range, "range A..B")->required();

  auto* zeta = app.add_subcommand("zeta", "zeta value computations");
  zeta->require_subcommand(1);

  auto* hp = zeta->add_subcommand("hp", "partial zeta over the principal class");
  long hp_m = 0, hp_bits = 0;
  std::string hp_term = "total";
  hp->add_option("--m", hp_m, "family parameter")->required();
  hp->add_option("--term", hp_term, "M1|M2|C1|C2|total")
      ->check(CLI::IsMember({"M1", "M2", "C1", "C2", "total"}));
  hp->add_option("--bits", hp_bits, "starting precision");

  auto* siegel = zeta->add_subcommand("siegel", "divisor-sum value at -1");
  long siegel_m = 0;
  bool siegel_list = false;
  siegel->add_option("--m", siegel_m, "family parameter")->required();
  siegel->add_flag("--list", siegel_list, "print every element");

  auto* euler = zeta->add_subcommand("euler", "truncated Euler product at 2");
  long euler_m = 0;
  uint64_t euler_bound = 0;
  euler->add_option("--m", euler_m, "family parameter")->required();
  euler->add_option("--prime-bound", euler_bound, "truncation bound")->required();

  auto* crit = app.add_subcommand("criterion", "class-number-one criterion sweep");
  std::string crit_range, crit_format = "table";
  crit->add_option("--m-range", crit_range, "range A..B")->required();
  crit->add_option("--format", crit_format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  auto* cn = app.add_subcommand("classnumber", "analytic class number estimate");
  long cn_m = 0;
  uint64_t cn_bound = 0;
  cn->add_option("--m", cn_m, "family parameter")->required();
  cn->add_option("--prime-bound", cn_bound, "truncation bound")->required();

  auto* ds = app.add_subcommand("dedekind-sum", "generalized Dedekind sum");
  std::string ds_matrix, ds_r;
  bool ds_reduced = false;
  ds->add_option("--matrix", ds_matrix, "a11,a12,...,a33")->required();
  ds->add_option("--r", ds_r, "r1,r2,r3")->required();
  ds->add_flag("--reduced", ds_reduced, "use the coset-reduced evaluator");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) run_fields_validate(validate_range);
    if (hp->parsed()) run_zeta_hp(hp_m, hp_term, hp_bits);
    if (siegel->parsed()) run_zeta_siegel(siegel_m, siegel_list);
    if (euler->parsed()) run_zeta_euler(euler_m, euler_bound);
    if (crit->parsed()) run_criterion(crit_range, crit_format);
    if (cn->parsed()) run_classnumber(cn_m, cn_bound);
    if (ds->parsed()) run_dedekind_sum(ds_matrix, ds_r, ds_reduced);
  } catch (const precision_exhausted& e) {
    std::cerr << "resource exhaustion: " << e.what() << "\n";
    return 2;
  } catch (const budget_exceeded& e) {
    std::cerr << "resource exhaustion: " << e.what() << "\n";
    return 2;
  } catch (const factorization_timeout& e) {
    std::cerr << "resource exhaustion: " << e.what() << "\n";
    return 2;
  } catch (const inconclusive_estimate& e) {
    std::cerr << "resource exhaustion: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
