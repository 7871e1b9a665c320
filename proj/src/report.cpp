#include "cubiczeta/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace cz {

namespace {

std::string witness_coords(const CriterionWitness& w) {
  return "(1," + std::to_string(w.b) + "," + std::to_string(w.c) + ")";
}

}  // namespace

const char* validity_str(Validity v) {
  switch (v) {
    case Validity::valid_case_i: return "case_i";
    case Validity::valid_case_ii: return "case_ii";
    default: return "invalid";
  }
}

std::string criterion_table(const std::vector<CriterionReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(5) << "m" << std::setw(9) << "valid"
     << std::setw(11) << "all_prime" << std::setw(14) << "zeta_partial"
     << std::setw(14) << "zeta_siegel" << "witnesses\n";
  for (const auto& r : reports) {
    os << std::left << std::setw(5) << r.m
       << std::setw(9) << validity_str(r.validity.kind);
    if (r.skipped || !r.failure.empty()) {
      os << std::setw(11) << "-" << std::setw(14) << "-" << std::setw(14) << "-"
         << (r.skipped ? r.validity.reason : r.failure) << "\n";
      continue;
    }
    os << std::setw(11) << (r.all_prime ? "yes" : "no")
       << std::setw(14) << rat_str(r.zeta_partial)
       << std::setw(14) << rat_str(r.zeta_siegel);
    if (r.witnesses.empty()) {
      os << "-";
    } else {
      for (size_t i = 0; i < r.witnesses.size(); ++i)
        os << (i ? " " : "") << witness_coords(r.witnesses[i]);
    }
    os << "\n";
  }
  return os.str();
}

std::string criterion_csv(const std::vector<CriterionReport>& reports) {
  std::ostringstream os;
  os << "m,valid,all_prime,zeta_partial,zeta_siegel,witnesses\n";
  for (const auto& r : reports) {
    os << r.m << "," << validity_str(r.validity.kind) << ",";
    if (r.skipped || !r.failure.empty()) {
      os << ",,,\n";
      continue;
    }
    os << (r.all_prime ? "true" : "false") << "," << rat_str(r.zeta_partial)
       << "," << rat_str(r.zeta_siegel) << ",";
    for (size_t i = 0; i < r.witnesses.size(); ++i) {
      const auto& w = r.witnesses[i];
      os << (i ? ";" : "") << w.b << ":" << w.c << ":" << int_str(w.ideal.norm);
    }
    os << "\n";
  }
  return os.str();
}

std::string criterion_json(const std::vector<CriterionReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json o;
    o["m"] = r.m;
    o["valid"] = validity_str(r.validity.kind);
    if (r.skipped) {
      o["skipped"] = true;
      o["reason"] = r.validity.reason;
      arr.push_back(std::move(o));
      continue;
    }
    if (!r.failure.empty()) {
      o["error"] = r.failure;
      arr.push_back(std::move(o));
      continue;
    }
    o["all_prime"] = r.all_prime;
    o["zeta_partial"] = rat_str(r.zeta_partial);
    o["zeta_siegel"] = rat_str(r.zeta_siegel);
    nlohmann::ordered_json ws = nlohmann::ordered_json::array();
    for (const auto& w : r.witnesses) {
      nlohmann::ordered_json wo;
      wo["nu"] = {1, w.b, w.c};
      wo["norm"] = int_str(w.ideal.norm);
      nlohmann::ordered_json fs = nlohmann::ordered_json::array();
      for (const auto& [P, e] : w.ideal.factors) {
        nlohmann::ordered_json fo;
        fo["p"] = int_str(P.p);
        fo["e"] = e;
        fo["f"] = P.f;
        fs.push_back(std::move(fo));
      }
      wo["factors"] = std::move(fs);
      ws.push_back(std::move(wo));
    }
    o["witnesses"] = std::move(ws);
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

}  // namespace cz
