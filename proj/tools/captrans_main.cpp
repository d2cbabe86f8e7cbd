#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "captrans/json_io.hpp"
#include "captrans/oracle.hpp"
#include "captrans/transport.hpp"

namespace {

using namespace captrans;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;
constexpr int kExitSolver = 3;

// Cost specs: absdiff+kappa[:k], tiered[:k:k+], equalized[:k], or a path to
// a cost JSON file. The kappa lift picks its variant from the method.
CostMatrix cost_from_spec(const std::string& spec, const Capacity& mu, const Capacity& nu,
                          Method method) {
    auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (true) {
            std::size_t colon = s.find(':', start);
            parts.push_back(s.substr(start, colon == std::string::npos ? colon : colon - start));
            if (colon == std::string::npos) break;
            start = colon + 1;
        }
        return parts;
    };
    auto num = [](const std::string& s, const char* what) {
        try {
            std::size_t used = 0;
            double v = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw ParseError(std::string("bad ") + what + " value '" + s + "'");
        }
    };

    std::vector<std::string> parts = split(spec);
    const std::string& head = parts[0];
    GroundCost c = ground_absdiff(mu.universe(), nu.universe());
    if (head == "absdiff+kappa") {
        if (parts.size() > 2) throw ParseError("absdiff+kappa takes at most one parameter");
        double kappa = parts.size() > 1 ? num(parts[1], "kappa") : c.max_value() + 1.0;
        return lift_kappa(c, kappa, method != Method::MaxPlus);
    }
    if (head == "tiered") {
        if (parts.size() > 3) throw ParseError("tiered takes at most two parameters");
        double kappa = parts.size() > 1 ? num(parts[1], "kappa") : c.max_value() + 1.0;
        double kappa_plus = parts.size() > 2 ? num(parts[2], "kappa_plus") : kappa + 1.0;
        return lift_tiered(c, kappa, kappa_plus);
    }
    if (head == "equalized") {
        if (parts.size() > 2) throw ParseError("equalized takes at most one parameter");
        double kappa = parts.size() > 1 ? num(parts[1], "kappa") : c.max_value() + 1.0;
        return lift_equalized(c, mu, nu, kappa);
    }
    CostMatrix cm = cost_from_file(spec);
    if (!(cm.x() == mu.universe()) || !(cm.y() == nu.universe())) {
        throw ParseError("cost file universes do not match the measures");
    }
    return cm;
}

int run_transform(const std::string& measure_path, const std::string& kind) {
    Capacity mu = measure_from_file(measure_path);
    SetVector v = kind == "mobius" ? mobius(mu) : maxplus(mu);
    std::fputs(setvector_to_json_text(v).c_str(), stdout);
    return kExitOk;
}

int run_transport(const std::string& mu_path, const std::string& nu_path,
                  const std::string& method_name, const std::string& cost_spec) {
    Capacity mu = measure_from_file(mu_path);
    Capacity nu = measure_from_file(nu_path);
    Method method = method_from_string(method_name);
    CostMatrix cm = cost_from_spec(cost_spec, mu, nu, method);
    TransportPlan plan = method == Method::Bpa      ? solve_bpa(mu, nu, cm)
                         : method == Method::Mobius ? solve_mobius(mu, nu, cm)
                                                    : solve_maxplus(mu, nu, cm);
    if (plan.status == LPStatus::IterationLimit) {
        std::fprintf(stderr, "solver stopped at the iteration limit\n");
        return kExitSolver;
    }
    if (plan.status != LPStatus::Optimal) {
        std::fprintf(stderr, "no optimal plan: %s\n", to_string(plan.status));
        return kExitDomain;
    }
    std::fputs(plan_to_json_text(plan).c_str(), stdout);
    return kExitOk;
}

int run_distance(const std::string& mu_path, const std::string& nu_path,
                 const std::string& cost_spec) {
    Capacity mu = measure_from_file(mu_path);
    Capacity nu = measure_from_file(nu_path);
    CostMatrix cm = cost_from_spec(cost_spec, mu, nu, Method::MaxPlus);
    double d = discrepancy(mu, nu, cm);
    std::fprintf(stdout, "%s\n", format_number(d).c_str());
    return kExitOk;
}

int run_validate(const std::string& measure_path) {
    Capacity mu = measure_from_file(measure_path);
    std::fprintf(stdout, "valid capacity on %d elements (%u subset values)\n",
                 mu.universe().size(), mu.universe().subset_count() - 1);
    std::fprintf(stdout, "normalized: %s\n", mu.is_normalized() ? "yes" : "no");
    std::fprintf(stdout, "belief function: %s\n", is_belief(mu) ? "yes" : "no");
    std::fprintf(stdout, "additive: %s\n", is_additive(mu) ? "yes" : "no");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Transport problems for non-additive measures on finite sets"};
    app.require_subcommand(1);

    std::string measure_path, mu_path, nu_path, cost_spec, kind, method_name;

    CLI::App* transform = app.add_subcommand("transform", "Print a transform of a measure");
    transform->add_option("--measure", measure_path, "measure JSON file")->required();
    transform->add_option("--kind", kind, "mobius or maxplus")
        ->required()
        ->check(CLI::IsMember({"mobius", "maxplus"}));

    CLI::App* transport = app.add_subcommand("transport", "Solve a transport problem");
    transport->add_option("--mu", mu_path, "source measure JSON file")->required();
    transport->add_option("--nu", nu_path, "target measure JSON file")->required();
    transport->add_option("--method", method_name, "bpa, mobius or maxplus")
        ->required()
        ->check(CLI::IsMember({"bpa", "mobius", "maxplus"}));
    transport
        ->add_option("--cost", cost_spec,
                     "absdiff+kappa[:k], tiered[:k:k+], equalized[:k], or a cost JSON file")
        ->required();

    CLI::App* distance = app.add_subcommand("distance", "Print the discrepancy between measures");
    distance->add_option("--mu", mu_path, "source measure JSON file")->required();
    distance->add_option("--nu", nu_path, "target measure JSON file")->required();
    distance
        ->add_option("--cost", cost_spec,
                     "absdiff+kappa[:k], tiered[:k:k+], equalized[:k], or a cost JSON file")
        ->required();

    CLI::App* validate = app.add_subcommand("validate", "Check a measure file");
    validate->add_option("--measure", measure_path, "measure JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (transform->parsed()) return run_transform(measure_path, kind);
        if (transport->parsed()) return run_transport(mu_path, nu_path, method_name, cost_spec);
        if (distance->parsed()) return run_distance(mu_path, nu_path, cost_spec);
        return run_validate(measure_path);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitParse;
    } catch (const SolverLimit& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitSolver;
    } catch (const captrans::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDomain;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitParse;
    }
}
