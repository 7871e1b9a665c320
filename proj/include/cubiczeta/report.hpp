#ifndef CUBICZETA_REPORT_HPP
#define CUBICZETA_REPORT_HPP

#include <string>
#include <vector>

#include "cubiczeta/criterion.hpp"

namespace cz {

const char* validity_str(Validity v);

// Deterministic renderings of a criterion sweep.  Rationals are emitted as
// "p/q" strings, never floats, so equal inputs give byte-identical output.
std::string criterion_table(const std::vector<CriterionReport>& reports);
std::string criterion_csv(const std::vector<CriterionReport>& reports);
std::string criterion_json(const std::vector<CriterionReport>& reports);

}  // namespace cz

#endif
