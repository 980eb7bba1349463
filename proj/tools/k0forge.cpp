#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "k0forge/engine.hpp"

namespace {

constexpr int kExitInvalidParams = 2;
constexpr int kExitCertificateFailure = 3;
constexpr int kExitEmptyWindow = 4;

k0forge::Policy parse_policy(const std::string& text, std::uint64_t& seed) {
    if (text == "minimal") return k0forge::Policy::Minimal;
    if (text.rfind("random:", 0) == 0) {
        seed = std::stoull(text.substr(7));
        return k0forge::Policy::SeededRandom;
    }
    throw k0forge::InvalidParams("unknown policy: " + text);
}

int cmd_run(const std::string& k_text, const std::string& n_text, int stages,
            const std::string& policy_text, const std::string& format,
            const std::string& out_path) {
    k0forge::ConstructionParams params;
    params.k = k0forge::parse_rational(k_text);
    params.n = k0forge::Supernatural::parse(n_text);
    params.stages = stages;
    params.policy = parse_policy(policy_text, params.seed);

    k0forge::Report report = k0forge::run(params);
    std::string body = format == "table" ? k0forge::to_table(report)
                                         : k0forge::to_json(report).dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(out_path);
        if (!out) throw k0forge::InvalidParams("cannot open output path: " + out_path);
        out << body;
    }
    return 0;
}

int cmd_check_class(const std::string& q, const std::string& m, const std::string& h,
                    const std::string& factors) {
    k0forge::StandardForm sf{k0forge::Int(q), k0forge::Int(m)};
    k0forge::Positivity p = k0forge::classify(sf, k0forge::Int(h), k0forge::Int(factors));
    const char* verdict = nullptr;
    switch (p.verdict) {
        case k0forge::Verdict::Zero: verdict = "Zero"; break;
        case k0forge::Verdict::Positive: verdict = "Positive"; break;
        case k0forge::Verdict::NotPositive: verdict = "NotPositive"; break;
        case k0forge::Verdict::Unknown: verdict = "Unknown"; break;
    }
    std::cout << verdict << ": " << p.certificate << "\n";
    return 0;
}

int cmd_witness(const std::string& k_text, const std::string& n_text) {
    k0forge::ConstructionParams params;
    params.k = k0forge::parse_rational(k_text);
    params.n = k0forge::Supernatural::parse(n_text);
    params.stages = 1;
    k0forge::Report report = k0forge::run(params);
    std::cout << "(" << k0forge::rat_to_string(report.witness.x) << ", "
              << report.witness.n.get_str() << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact K_0 construction engine for strongly perforated rational targets"};
    app.require_subcommand(1);

    std::string k_text, n_text, policy_text = "minimal", format = "json", out_path;
    int stages = 1;
    auto* run = app.add_subcommand("run", "execute the stage construction and emit a report");
    run->add_option("--k", k_text, "scale, a rational A/B with 0 < A/B < 1")->required();
    run->add_option("--supernatural", n_text, "generalized integer, e.g. 2^inf*3^5")->required();
    run->add_option("--stages", stages, "number of stages J >= 1")->required();
    run->add_option("--policy", policy_text, "minimal | random:SEED");
    run->add_option("--format", format, "json | table")->check(CLI::IsMember({"json", "table"}));
    run->add_option("--out", out_path, "write the report to PATH instead of stdout");

    std::string q, m, h, factors;
    auto* check = app.add_subcommand("check-class", "positivity verdict for h*([xi^xq]-[theta_m])");
    check->set_help_flag("--help", "print help");  // frees -h/--h for the multiplicity
    check->add_option("--q", q)->required();
    check->add_option("--m", m)->required();
    check->add_option("--h", h)->required();
    check->add_option("--factors", factors)->required();

    std::string wk, wn;
    auto* witness = app.add_subcommand("witness", "print a strong-perforation witness (x, n)");
    witness->add_option("--k", wk)->required();
    witness->add_option("--supernatural", wn)->required();

    try {
        app.parse(argc, argv);
        if (run->parsed()) return cmd_run(k_text, n_text, stages, policy_text, format, out_path);
        if (check->parsed()) return cmd_check_class(q, m, h, factors);
        return cmd_witness(wk, wn);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidParams;
    } catch (const k0forge::EmptyWindow& e) {
        std::cerr << "empty window: " << e.what() << "\n";
        return kExitEmptyWindow;
    } catch (const k0forge::CertificateFailure& e) {
        std::cerr << "certificate failure: " << e.what() << "\n";
        return kExitCertificateFailure;
    } catch (const k0forge::InvalidParams& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitInvalidParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    }
}
