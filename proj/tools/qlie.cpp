#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qlie/commands.hpp"

namespace {

int emit(const qlie::Report& rep, const qlie::RunConfig& cfg) {
    std::string payload;
    if (cfg.format == "json")
        payload = rep.to_json().dump(2) + "\n";
    else
        payload = rep.to_tsv();
    if (cfg.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << cfg.out << " for writing\n";
            return 2;
        }
        f << payload;
    }
    if (!rep.ok()) {
        for (const auto& a : rep.assertions)
            if (!a.pass) std::cerr << "FAILED assertion: " << a.ref << "\n";
        return 1;
    }
    return 0;
}

void add_common(CLI::App* cmd, qlie::RunConfig& cfg) {
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"tsv", "json"}));
    cmd->add_option("--out", cfg.out, "Write the report to a file instead of standard output");
    cmd->set_config("--config", "", "Plain key=value file with defaults for the flags");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic computations in free graded Lie algebras, their "
                 "differential graded extensions, and Sullivan algebras"};
    app.require_subcommand(1);

    qlie::RunConfig cfg;

    CLI::App* t1 = app.add_subcommand("table1", "Dimensions and basis of the layers with two "
                                                "occurrences of the second generator");
    t1->add_option("--max-wl", cfg.max_wl, "Largest word length")->capture_default_str();
    t1->add_flag("--allow-slow", cfg.allow_slow, "Lift the word-length guard");
    add_common(t1, cfg);

    CLI::App* t2 = app.add_subcommand("table2", "Bigraded dimension grid of the two-generator "
                                                "free Lie algebra");
    t2->add_option("--max-wl", cfg.max_wl, "Largest word length")->capture_default_str();
    t2->add_flag("--allow-slow", cfg.allow_slow, "Lift the word-length guard");
    add_common(t2, cfg);

    CLI::App* ce = app.add_subcommand("counterexample",
                                      "Build the two-generator extension and optionally verify "
                                      "its homological properties");
    ce->add_option("--deg-a", cfg.deg_a, "Odd degree of a")->capture_default_str();
    ce->add_option("--deg-b", cfg.deg_b, "Odd degree of b")->capture_default_str();
    ce->add_option("--count", cfg.count, "Number of adjoined generators")->capture_default_str();
    ce->add_option("--cap", cfg.cap, "Truncation degree")->capture_default_str();
    ce->add_flag("--verify", cfg.verify, "Run the full verification report");
    add_common(ce, cfg);

    CLI::App* de = app.add_subcommand("dual-example",
                                      "The dual-side example with finite odd homotopy and "
                                      "finite spherical cohomology");
    de->add_option("--deg-a", cfg.deg_a, "Odd degree of a (>= 3)")->capture_default_str();
    de->add_option("--count", cfg.count, "Number of n generators")->capture_default_str();
    de->add_option("--cap", cfg.cap, "Truncation degree")->capture_default_str();
    add_common(de, cfg);

    CLI::App* cc = app.add_subcommand("ce-check",
                                      "Dualize a preset chain Lie algebra and check the "
                                      "dimension isomorphism");
    cc->add_option("preset", cfg.preset,
                   "One of: sphere-odd, wedge-two-spheres, counterexample-default")
        ->required();
    cc->add_option("--cap", cfg.cap, "Truncation degree")->capture_default_str();
    add_common(cc, cfg);

    CLI11_PARSE(app, argc, argv);

    cfg.command = app.get_subcommands().front()->get_name();
    try {
        qlie::Report rep = qlie::run_command(cfg);
        return emit(rep, cfg);
    } catch (const qlie::RangeError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const qlie::PreconditionError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const qlie::CapExceededError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const qlie::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
