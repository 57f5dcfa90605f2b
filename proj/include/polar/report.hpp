#ifndef POLAR_REPORT_HPP
#define POLAR_REPORT_HPP

#include <string>

#include "json.hpp"
#include "polar/polar_ops.hpp"

namespace polar {

// Problem-file loading with schema validation; errors carry a JSON pointer.
ProblemSpec load_problem(const std::string& path);
ProblemSpec problem_from_json(const nlohmann::json& doc);

// JSON renderings; all object keys are sorted and polynomial printing is
// canonical, so equal inputs yield byte-identical documents.
nlohmann::json group_json(const FGAbelianGroup& g);
nlohmann::json cycle_json(const GradedEnrichedCycle& e, const MonomialOrder& ord);
nlohmann::json ideal_json(const Ideal& I, const MonomialOrder& ord);

nlohmann::json gecc_json(const GeccBuilder& b, const MonomialOrder& ord);
nlohmann::json polar_json(const PolarResult& pr, const MonomialOrder& ord);
nlohmann::json main1_json(const Main1Report& rep, const MonomialOrder& ord);
nlohmann::json main2_json(const PairReport& rep, const MonomialOrder& ord);
nlohmann::json emptiness_json(const EmptinessReport& rep);
nlohmann::json family_json(const FamilyReport& rep, const MonomialOrder& ord);

// Human-readable renderings of the same structures.
std::string gecc_text(const GeccBuilder& b, const MonomialOrder& ord);
std::string cycle_text(const GradedEnrichedCycle& e, const MonomialOrder& ord);
std::string polar_text(const PolarResult& pr, const MonomialOrder& ord);
std::string main1_text(const Main1Report& rep, const MonomialOrder& ord);
std::string main2_text(const PairReport& rep, const MonomialOrder& ord);
std::string emptiness_text(const EmptinessReport& rep);
std::string family_text(const FamilyReport& rep, const MonomialOrder& ord);

}  // namespace polar

#endif
