#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "cyc/compute.hpp"
#include "cyc/suites.hpp"

using namespace cyc;

namespace {

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw schema_error("", std::string("not valid JSON: ") + e.what());
    }
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw usage_error("cannot write " + out);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyctool: cyclic powers, Witt vectors and splittings over finite chain rings"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> suites;
    SuiteOptions opt;
    std::string out, format = "json";
    bool timing = false;
    verify->add_option("--suite", suites, "witt, tate, extension, dg (default: all)")
        ->check(CLI::IsMember({"witt", "tate", "extension", "dg"}));
    verify->add_option("--p", opt.ps, "primes");
    verify->add_option("--d", opt.d, "field degree")->check(CLI::Range(1, 4));
    verify->add_option("--ring", opt.ring, "fp|fq|z4|z9|gr4")->check(CLI::IsMember({"fp", "fq", "z4", "z9", "gr4"}));
    verify->add_option("--seed", opt.seed, "random seed");
    verify->add_option("--sizes", opt.sizes, "random cases per randomized check")->check(CLI::Range(1, 100000));
    verify->add_option("--out", out, "write the report here");
    verify->add_option("--format", format, "json|md")->check(CLI::IsMember({"json", "md"}));
    verify->add_flag("--timing", timing, "include wall times");

    auto* compute = app.add_subcommand("compute", "compute from a JSON complex");
    std::string kind, input, cout_path;
    compute->add_option("kind", kind, "tate|cyclic|splitting")->required()->check(CLI::IsMember({"tate", "cyclic", "splitting"}));
    compute->add_option("input", input, "JSON file")->required();
    compute->add_option("--out", cout_path, "write the result here");

    auto* demo = app.add_subcommand("demo-witt", "addition and multiplication tables of W2(F_{p^d})");
    int dp = 2, dd = 1;
    demo->add_option("p", dp)->required();
    demo->add_option("d", dd)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) {
            if (suites.empty()) suites = suite_names();
            std::vector<SuiteResult> rs;
            int failed = 0;
            for (const auto& s : suites) {
                SuiteResult r{s, {}};
                for (int id : suite_criteria(s)) {
                    r.criteria.push_back(run_criterion(id, opt));
                    failed += r.criteria.back().failures() + r.criteria.back().cases.empty();
                }
                rs.push_back(std::move(r));
            }
            emit(format == "md" ? report_md(rs, opt, timing) : report_json(rs, opt, timing).dump(2) + "\n", out);
            return failed ? 1 : 0;
        }
        if (*compute) {
            json in = read_json(input);
            json res = kind == "tate" ? compute_tate(in) : kind == "cyclic" ? compute_cyclic(in) : compute_splitting(in);
            emit(res.dump(2) + "\n", cout_path);
            return 0;
        }
        if (*demo) {
            std::cout << demo_witt(dp, dd);
            return 0;
        }
    } catch (const schema_error& e) {
        std::cerr << "error at " << (e.pointer.empty() ? "/" : e.pointer) << ": " << e.what() << "\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
