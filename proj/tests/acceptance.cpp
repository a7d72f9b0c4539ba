// Acceptance suite: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <CLI11.hpp>

#include <cstdio>

#include "tourn/acceptance.hpp"

int main(int argc, char** argv) {
    CLI::App app{"acceptance suite"};
    tourn::acceptance::Options o;
    std::vector<int> only;
    app.add_option("--seed", o.seed, "Master seed")->capture_default_str();
    app.add_option("--threads", o.threads, "Worker threads")->capture_default_str();
    app.add_option("--only", only, "Run these criteria only");
    CLI11_PARSE(app, argc, argv);

    bool all = true;
    for (const auto& r : tourn::acceptance::run_all(o, only)) {
        all = all && r.pass;
        std::printf("%s  %2d  %s: %s [%.2f s, budget %.0f s]\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str(), r.seconds, r.budget_seconds);
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
