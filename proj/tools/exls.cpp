#include <cstdint>
#include <iostream>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "exls/e16k16.hpp"
#include "exls/embeddings.hpp"
#include "exls/errors.hpp"
#include "exls/repn.hpp"
#include "exls/suites.hpp"
#include "exls/tables.hpp"
#include "exls/vfalgebras.hpp"

using namespace exls;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

std::pair<int, int> parse_range(const std::string &s) {
    static const std::regex re(R"(^\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*$)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw std::out_of_range("--n expects a..b, got '" + s + "'");
    int a = std::stoi(m[1]);
    int b = m[2].matched ? std::stoi(m[2]) : a;
    return {a, b};
}

std::optional<Coord> parse_coords(const std::string &s) {
    if (s.empty()) return std::nullopt;
    if (s == "rho") return Coord::Rho;
    if (s == "xieta") return Coord::XiEta;
    throw std::invalid_argument("--coords must be rho or xieta");
}

K16Elt with_window(K16Elt f, std::optional<int> twindow) {
    if (twindow) f.truncate(*twindow);
    return f;
}

std::string bracket(const std::string &alg, const std::string &a, const std::string &b, std::optional<Coord> coords) {
    if (alg == "e510") return bracket_e510(parse_e510(a), parse_e510(b)).str();
    if (alg == "e44") return bracket_e44(parse_e44(a), parse_e44(b)).str();
    if (alg == "e16") return bracket_e16(parse_e16(a), parse_e16(b)).str();
    if (alg == "k16") {
        K16Elt f = parse_k16(a, coords), g = parse_k16(b, coords.value_or(f.coord()));
        return bracket_k16(f, g).str();
    }
    throw std::invalid_argument("unknown algebra '" + alg + "' (expected e510, e44, e16, k16)");
}

int exit_for(const std::vector<VerifyReport> &reps) {
    bool failed = false, inconclusive = false;
    for (const auto &r : reps) {
        failed = failed || r.failed() > 0;
        inconclusive = inconclusive || r.inconclusive;
    }
    return failed ? kExitFail : inconclusive ? kExitInconclusive : kExitPass;
}

void print_reports(const std::vector<VerifyReport> &reps, bool json, bool many) {
    if (!json) {
        for (const auto &r : reps) std::cout << r.human();
        return;
    }
    if (!many) {
        std::cout << reps.front().to_json() << "\n";
        return;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &r : reps) arr.push_back(nlohmann::ordered_json::parse(r.to_json()));
    nlohmann::ordered_json out;
    out["ok"] = exit_for(reps) == kExitPass;
    out["suites"] = arr;
    std::cout << out.dump(2) << "\n";
}

int decompose(int r, int kmax, int x1max, bool json) {
    nlohmann::ordered_json j;
    j["r"] = r;
    j["kmax"] = kmax;
    int kmin = r >= 0 ? 2 * r - 2 : -2;
    nlohmann::ordered_json dims = nlohmann::ordered_json::array();
    for (int k = kmin; k <= kmax; ++k) dims.push_back({{"k", k}, {"dim", enumerate_slice(r, k).basis.size()}});
    j["slices"] = dims;
    E510Elt v = v_r(r);
    j["generator"] = v.str();
    j["weight"] = weight_of(v).str();
    j["annihilated_by_negative"] = annihilated_by_negative(v);
    VerifyReport gen = generation_check(r, x1max);
    j["generation"] = nlohmann::ordered_json::parse(gen.to_json());
    if (json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "g_" << r << " slices (k: dim):";
        for (const auto &d : dims) std::cout << " " << d["k"].get<int>() << ":" << d["dim"].get<std::size_t>();
        std::cout << "\ngenerator " << v.str() << " weight " << weight_of(v).str()
                  << (annihilated_by_negative(v) ? ", killed by the negative part\n" : ", NOT killed by the negative part\n")
                  << gen.human();
    }
    return exit_for({gen});
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exceptional Lie superalgebra embeddings: brackets, tables and verification suites"};
    app.require_subcommand(1);

    std::string alg, a, b, coords;
    auto *br = app.add_subcommand("bracket", "Bracket of two elements of e510, e44, e16 or k16");
    br->add_option("algebra", alg, "e510, e44, e16 or k16")->required();
    br->add_option("a", a, "first element")->required();
    br->add_option("b", b, "second element")->required();
    br->add_option("--coords", coords, "k16 coordinates when the input is only constants: rho or xieta");

    std::string suite, nrange;
    SuiteOptions opt;
    bool json = false;
    int twindow = 0;
    auto *ver = app.add_subcommand("verify", "Run a verification suite (or 'all')");
    ver->add_option("suite", suite, "suite name")->required();
    ver->add_option("--seed", opt.seed, "random seed");
    ver->add_option("--trials", opt.trials, "random trials");
    auto *tw = ver->add_option("--twindow", twindow, "truncation window of the suite");
    ver->add_option("--n", nrange, "t-exponent range a..b");
    ver->add_flag("--quick", opt.quick, "smaller default windows");
    ver->add_flag("--json", json, "JSON report");

    std::string table, format = "md";
    auto *tab = app.add_subcommand("table", "Print the iota or Psi table");
    tab->add_option("name", table, "iota or Psi")->required()->check(CLI::IsMember({"iota", "Psi"}));
    tab->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));

    int r = 1, kmax = 8, x1max = 3;
    bool djson = false;
    auto *dec = app.add_subcommand("decompose", "Slices, weight and generation of the module g_r");
    dec->add_option("--r", r, "module index, >= -1");
    dec->add_option("--kmax", kmax, "largest fine degree listed");
    dec->add_option("--x1max", x1max, "x1-degree window of the generation check");
    dec->add_flag("--json", djson, "JSON output");

    std::string expr, kcoords;
    int kwindow = 0;
    auto *io = app.add_subcommand("iota", "iota(f) = f + A(f) in K(1,6)");
    auto *ao = app.add_subcommand("A", "The operator A on K(1,6)");
    for (auto *sc : {io, ao}) {
        sc->add_option("f", expr, "K(1,6) element, e.g. t*xi2*eta3")->required();
        sc->add_option("--coords", kcoords, "rho or xieta");
        sc->add_option("--twindow", kwindow, "declare the input known modulo t^N");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*br) {
            std::cout << bracket(alg, a, b, parse_coords(coords)) << "\n";
            return kExitPass;
        }
        if (*ver) {
            if (*tw) opt.twindow = twindow;
            if (!nrange.empty()) opt.n = parse_range(nrange);
            std::vector<VerifyReport> reps;
            bool many = suite == "all";
            if (many)
                reps = run_all(opt);
            else
                reps.push_back(run_suite(suite, opt));
            print_reports(reps, json, many);
            return exit_for(reps);
        }
        if (*tab) {
            TextTable t = make_table(table);
            std::cout << (format == "json" ? render_json(t) : render_markdown(t));
            return kExitPass;
        }
        if (*dec) return decompose(r, kmax, x1max, djson);
        if (*io || *ao) {
            std::optional<int> w;
            if (kwindow > 0) w = kwindow;
            K16Elt f = with_window(parse_k16(expr, parse_coords(kcoords)), w);
            std::cout << (*io ? op_iota(f) : op_A(f)).str() << "\n";
            return kExitPass;
        }
    } catch (const HeadroomError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
