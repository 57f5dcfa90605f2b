#include "polar/cli.hpp"

#include <cstdlib>
#include <optional>
#include <filesystem>

#include "CLI11.hpp"
#include "polar/errors.hpp"
#include "polar/report.hpp"

namespace polar {

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
    std::string command;
    std::string input;
    bool json = false;
    std::uint64_t seed = 1;
    int trials = 3;
    std::string order = "grevlex";
    long budget = 200000;
};

MonomialOrder order_of(const Options& opt) {
    return opt.order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
}

nlohmann::json envelope(const Options& opt, nlohmann::json result) {
    return nlohmann::json{{"tool", "polarcycle"},
                          {"version", kVersion},
                          {"command", opt.command},
                          {"input", std::filesystem::path(opt.input).filename().string()},
                          {"seed", opt.seed},
                          {"order", opt.order},
                          {"result", std::move(result)}};
}

void emit(const Options& opt, std::ostream& out, nlohmann::json result,
          const std::string& text) {
    if (opt.json)
        out << envelope(opt, std::move(result)).dump(2) << "\n";
    else
        out << text;
}

// Deterministic palette of slice values for the family subcommand.
std::vector<Rational> family_samples(int count) {
    static const int nums[] = {1, -1, 1, -1, 2, -2, 1, -1};
    static const int dens[] = {1, 1, 2, 2, 1, 1, 3, 3};
    std::vector<Rational> out;
    for (int i = 0; i < count && i < 8; ++i) {
        Rational a(nums[i], dens[i]);
        a.canonicalize();
        out.push_back(a);
    }
    return out;
}

// For the attaching number: use g when it is linear, else sample forms.
int run_leattach(const Options& opt, const ProblemSpec& spec, Rng& rng, std::ostream& out) {
    Polynomial form(spec.ambient);
    std::optional<LeAttachResult> res;
    const RationalPoint origin = RationalPoint::origin(spec.ambient);
    if (!spec.g.is_zero() && spec.g.degree() == 1 && spec.g.evaluate(origin) == 0) {
        form = spec.g;
        res = le_attaching(spec.f, form);
    }
    for (int attempt = 0; attempt < 60 && !res; ++attempt) {
        Polynomial ell(spec.ambient);
        for (std::size_t i = 0; i < spec.ambient->arity(); ++i)
            ell = ell + Polynomial::variable(spec.ambient, i).scaled(Rational(rng.int_in(-5, 5)));
        if (ell.is_zero()) continue;
        try {
            res = le_attaching(spec.f, ell);
            form = ell;
        } catch (const Error&) {
        }
    }
    if (!res) throw GenericityError("no generic linear form found for the attaching number");
    MonomialOrder ord = order_of(opt);
    nlohmann::json j{{"tau", res->tau},
                     {"form", form.str()},
                     {"polar", ideal_json(res->polar, ord)}};
    emit(opt, out, std::move(j),
         "tau = " + std::to_string(res->tau) + "  (slicing by " + form.str() + ")\n");
    return 0;
}

int dispatch(const Options& opt, std::ostream& out) {
    ProblemSpec spec = load_problem(opt.input);
    Rng rng(opt.seed);
    MonomialOrder ord = order_of(opt);

    if (opt.command == "gecc") {
        GeccBuilder builder(spec, rng);
        emit(opt, out, gecc_json(builder, ord), gecc_text(builder, ord));
        return 0;
    }
    if (opt.command == "conormal") {
        PolarPipeline pipe(spec, rng);
        GradedEnrichedCycle rc = pipe.relative_conormal_cycle();
        emit(opt, out, nlohmann::json{{"relative_conormal", cycle_json(rc, ord)}},
             "relative conormal cycle:\n" + cycle_text(rc, ord));
        return 0;
    }
    if (opt.command == "polar") {
        PolarPipeline pipe(spec, rng);
        PolarResult pr = pipe.polar_curve();
        emit(opt, out, polar_json(pr, ord), polar_text(pr, ord));
        return pr.curve_ok ? 0 : 2;
    }
    if (opt.command == "main1") {
        PolarPipeline pipe(spec, rng);
        Main1Report rep = pipe.main1();
        emit(opt, out, main1_json(rep, ord), main1_text(rep, ord));
        return rep.verdicts_hold ? 0 : 2;
    }
    if (opt.command == "main2") {
        PolarPipeline pipe(spec, rng);
        Main1Report gate = pipe.main1();
        if (!gate.verdicts_hold) {
            emit(opt, out, main1_json(gate, ord),
                 main1_text(gate, ord) + "pair report requires the dim verdicts\n");
            return 2;
        }
        PairReport rep = pipe.main2();
        emit(opt, out, main2_json(rep, ord), main2_text(rep, ord));
        return 0;
    }
    if (opt.command == "empty") {
        PolarPipeline pipe(spec, rng);
        EmptinessReport rep = pipe.emptiness(opt.trials);
        emit(opt, out, emptiness_json(rep), emptiness_text(rep));
        return 0;
    }
    if (opt.command == "leattach") return run_leattach(opt, spec, rng, out);
    if (opt.command == "milnor") {
        unsigned mu = milnor_number(spec.f, RationalPoint::origin(spec.ambient));
        emit(opt, out, nlohmann::json{{"milnor", mu}}, std::to_string(mu) + "\n");
        return 0;
    }
    if (opt.command == "family") {
        PolarPipeline pipe(spec, rng);
        FamilyReport rep = pipe.family(family_samples(opt.trials));
        emit(opt, out, family_json(rep, ord), family_text(rep, ord));
        return rep.verdict ? 0 : 2;
    }
    throw Error("unknown subcommand '" + opt.command + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"symbolic polar-curve and enriched characteristic-cycle calculator"};
    app.require_subcommand(1);

    Options opt;
    static const char* kCommands[] = {"gecc",  "conormal", "polar",  "main1", "main2",
                                      "empty", "leattach", "milnor", "family"};
    for (const char* name : kCommands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--input", opt.input, "problem file (JSON)")->required();
        sub->add_flag("--json", opt.json, "emit the JSON result document");
        sub->add_option("--seed", opt.seed, "seed for sampled forms and slices");
        sub->add_option("--trials", opt.trials, "sampling trials / family slices")
            ->check(CLI::PositiveNumber);
        sub->add_option("--order", opt.order, "term order for printed bases")
            ->check(CLI::IsMember({"grevlex", "lex"}));
        sub->add_option("--budget", opt.budget, "maximum S-pairs per basis computation");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 64;
    }

    opt.command = app.get_subcommands().front()->get_name();
    if (const char* env = std::getenv("POLAR_BUDGET")) {
        try {
            opt.budget = std::stol(env);
        } catch (...) {
            err << "error: POLAR_BUDGET must be an integer\n";
            return 64;
        }
    }
    set_groebner_budget(opt.budget);

    try {
        return dispatch(opt, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace polar
