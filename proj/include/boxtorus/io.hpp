#ifndef BOXTORUS_IO_HPP
#define BOXTORUS_IO_HPP

#include <string>

#include "boxtorus/norms.hpp"
#include "boxtorus/solver.hpp"
#include "boxtorus/verify.hpp"

namespace boxtorus {

// Coefficient dump: one "j,k,re,im" row per ball mode in lexicographic
// (j,k) order at 17 significant digits; exact double round-trip.
std::string field_to_csv(const FourierField& u);
FourierField field_from_csv(const std::string& csv);

// Plot-ready samples: "x,t,u" rows on the band-limit grid.
std::string grid_to_csv(const FourierField& u);

std::string to_json(const NormReport& r);
std::string to_json(const EstimateReport& r);
std::string to_json(const BootstrapReport& r);
std::string to_json(const SolutionRecord& r);
SolutionRecord solution_record_from_json(const std::string& text);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace boxtorus

#endif
