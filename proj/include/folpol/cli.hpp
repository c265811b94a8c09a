#pragma once
#include <ostream>
#include <string>
#include <vector>

#include "folpol/linsneto.hpp"
#include "folpol/projective.hpp"
#include "json.hpp"

namespace folpol::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "folpol/1";

json class_json(const SingClass& c);
json branch_json(const Branch& b);
json tree_json(const ReductionTree& t);
json divisor_json(const ReductionTree& t, const BranchDivisor& f);
json point_json(const SingularPoint& p);
json curve_term_json(const LocalCurveTerm& t);
json degree_json(const DegreeReport& r);
json bezout_json(const BezoutReport& r);
json brunella_json(const BrunellaReport& r);
json poincare_json(const PoincareReport& r);
json pencil_json(const PencilDegree& r);

// Indented key: value rendering of a report.
std::string render_text(const json& j);

// Runs one command; returns the process exit code (0 ok, 1 mathematical error, 2 usage or parse error).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace folpol::cli
