#ifndef POLAR_GECC_HPP
#define POLAR_GECC_HPP

#include <map>
#include <optional>
#include <string>

#include "polar/conormal.hpp"
#include "polar/enriched.hpp"
#include "polar/problem.hpp"
#include "polar/rng.hpp"

namespace polar {

struct StratumInfo {
    ConormalIdeal conormal;  // absolute conormal of the closure
    std::vector<MorseEntry> morse;
    std::string morse_source;  // override / open-stratum / curve-on-surface / point-link
    std::optional<unsigned> transverse_mult;
    std::optional<std::string> link_form;  // linear form certifying the point-link count
};

// Computes conormals and Morse modules for every stratum of a problem and
// assembles the graded enriched characteristic cycle of the shifted constant
// sheaf.
class GeccBuilder {
public:
    GeccBuilder(const ProblemSpec& spec, Rng& rng);

    const ProblemSpec& spec() const { return spec_; }
    const std::map<std::string, StratumInfo>& stratum_info() const { return info_; }
    const StratumInfo& info(const std::string& name) const;

    // Sum over strata of the Morse modules on the conormal components.
    GradedEnrichedCycle gecc() const;

    unsigned transverse_multiplicity(const StratumSpec& st);

    // Number of spheres in the complex-link bouquet at an isolated stratum
    // point, as a certified polar intersection number.
    unsigned link_count(const RationalPoint& p, std::string* form_used);

private:
    const ProblemSpec& spec_;
    Rng& rng_;
    std::map<std::string, StratumInfo> info_;

    std::vector<MorseEntry> morse_module(const StratumSpec& st, std::string& source,
                                         std::optional<unsigned>& tmult,
                                         std::optional<std::string>& lform);
    bool is_open_stratum(const StratumSpec& st) const;
    bool degenerate_covector(const RationalPoint& p, const std::vector<Rational>& grad) const;
    std::optional<unsigned> link_count_for(const Polynomial& ell, const RationalPoint& p);
};

// Builds the gecc of the problem's shifted constant sheaf.
GradedEnrichedCycle build_gecc(const ProblemSpec& spec, Rng& rng);

}  // namespace polar

#endif
