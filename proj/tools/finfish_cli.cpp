#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "finfish/bijection.hpp"
#include "finfish/decomp.hpp"
#include "finfish/enumeration.hpp"
#include "finfish/errors.hpp"
#include "finfish/fish.hpp"
#include "finfish/jsonio.hpp"
#include "finfish/perm.hpp"
#include "finfish/series.hpp"
#include "finfish/svg.hpp"
#include "finfish/waspwaist.hpp"
#include "json.hpp"

// Exit codes: 0 success, 1 domain failure (including a negative `check` and
// failed `verify`), 2 usage problems: bad flags, malformed input, limits.

namespace {

using nlohmann::json;
using namespace finfish;

constexpr const char* kFormatTag = "ff-v1";

// "-" reads stdin, an existing file is slurped, anything else is literal.
std::string read_input(const std::string& arg) {
    std::ostringstream buf;
    if (arg == "-") {
        buf << std::cin.rdbuf();
    } else if (std::filesystem::exists(arg) && std::filesystem::is_regular_file(arg)) {
        std::ifstream in(arg);
        if (!in) throw invalid_input("cannot read file " + arg);
        buf << in.rdbuf();
    } else {
        return arg;
    }
    return buf.str();
}

std::string trimmed(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool looks_like_json(const std::string& s) { return !s.empty() && s.front() == '{'; }

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw invalid_input("cannot write file " + path);
    out << content;
    if (!out) throw invalid_input("write to " + path + " failed");
}

json fish_json_tagged(const FightingFish& f) {
    json j = fish_to_json(f);
    j["format"] = kFormatTag;
    return j;
}

json stats_json(const FishStats& s) {
    return {{"size", s.size},
            {"lsize", s.lsize},
            {"rsize", s.rsize},
            {"fin", s.fin},
            {"tails", s.tails}};
}

std::string fish_to_text(const FightingFish& f) {
    std::ostringstream os;
    os << "cells: " << f.cell_count() << "\n";
    os << "head: " << (f.empty() ? std::string("-") : std::to_string(f.head)) << "\n";
    os << fish_stats_to_string(fish_stats(f)) << "\n";
    static constexpr SlotKind kOrder[4] = {SlotKind::LL, SlotKind::LR, SlotKind::UR,
                                           SlotKind::UL};
    for (cell_id c = 0; c < f.cell_count(); ++c) {
        os << "cell " << c << ":";
        for (SlotKind s : kOrder) {
            const cell_id d = f.partner(c, s);
            os << ' ' << slot_name(s) << '=';
            if (d == kFree)
                os << '-';
            else
                os << d;
        }
        os << "\n";
    }
    return os.str();
}

FightingFish fish_from_input(const std::string& text) {
    const std::string body = trimmed(text);
    if (looks_like_json(body)) return fish_from_json_text(body);
    return phi(parse_seq(body));
}

int run_sort(const std::string& input) {
    std::cout << seq_to_string(stack_sort(parse_seq(trimmed(read_input(input))))) << "\n";
    return 0;
}

int run_check(const std::string& input) {
    const bool ok = is_two_stack_sortable(parse_seq(trimmed(read_input(input))));
    std::cout << (ok ? "2-stack-sortable" : "not 2-stack-sortable") << "\n";
    return ok ? 0 : 1;
}

int run_decompose(const std::string& input, const std::string& format) {
    const std::string body = trimmed(read_input(input));
    if (looks_like_json(body)) {
        const FightingFish f = fish_from_json_text(body);
        const WaspWaist w = waspwaist_decompose(f);
        json j = waspwaist_to_json(w);
        if (format == "json") {
            j["format"] = kFormatTag;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "kind: " << (w.kind.tag == CKind::C1 ? "C1" : "C2") << "\n";
            std::cout << "i: ";
            if (w.kind.tag == CKind::C2)
                std::cout << w.kind.i << "\n";
            else
                std::cout << "-\n";
            std::cout << "p1: " << j["p1"].dump() << "\n";
            std::cout << "p2: " << j["p2"].dump() << "\n";
        }
        return 0;
    }
    const Perm p = parse_seq(body);
    const DecompKind kind = classify(p);
    const auto [p1, p2] = decompose(p);
    if (format == "json") {
        json j = {{"format", kFormatTag},
                  {"kind", kind.tag == CKind::C1 ? "C1" : "C2"},
                  {"i", kind.tag == CKind::C2 ? json(kind.i) : json()},
                  {"p1", json(p1)},
                  {"p2", json(p2)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "kind: " << (kind.tag == CKind::C1 ? "C1" : "C2") << "\n";
        std::cout << "i: ";
        if (kind.tag == CKind::C2)
            std::cout << kind.i << "\n";
        else
            std::cout << "-\n";
        std::cout << "p1: " << seq_to_string(p1) << "\n";
        std::cout << "p2: " << seq_to_string(p2) << "\n";
    }
    return 0;
}

int run_phi(const std::string& input, const std::string& format, const std::string& out) {
    const FightingFish f = phi(parse_seq(trimmed(read_input(input))));
    if (format == "json") {
        json j = fish_json_tagged(f);
        j["stats"] = stats_json(fish_stats(f));
        write_output(out, j.dump(2) + "\n");
    } else if (format == "svg") {
        write_output(out, render_svg(f));
    } else {
        write_output(out, fish_to_text(f));
    }
    return 0;
}

int run_phi_inverse(const std::string& input, const std::string& format) {
    const FightingFish f = fish_from_json_text(trimmed(read_input(input)));
    const Perm p = phi_inverse(f);
    if (format == "json") {
        json j = {{"format", kFormatTag}, {"permutation", json(p)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << seq_to_string(p) << "\n";
    }
    return 0;
}

int run_enumerate(int n, const std::string& method, int workers, const std::string& format) {
    const EnumMethod m = method == "grammar" ? EnumMethod::Grammar : EnumMethod::Brute;
    const std::vector<Perm> all = enumerate_2ssp(n, m, workers);
    if (format == "json") {
        json perms = json::array();
        for (const Perm& p : all) perms.push_back(json(p));
        json j = {{"format", kFormatTag},
                  {"n", n},
                  {"method", method},
                  {"count", all.size()},
                  {"permutations", std::move(perms)}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (const Perm& p : all) std::cout << seq_to_string(p) << "\n";
    }
    return 0;
}

int run_gf(int order, bool check, bool as_json) {
    if (check) {
        const ResidualReport rep = check_system(order);
        if (as_json) {
            json eqs = json::array();
            for (const ResidualEntry& e : rep.equations)
                eqs.push_back({{"equation", e.equation},
                               {"zero", e.zero},
                               {"offending", e.offending.empty() ? json() : json(e.offending)}});
            json j = {{"format", kFormatTag},
                      {"order", order},
                      {"pass", rep.all_zero()},
                      {"equations", std::move(eqs)}};
            std::cout << j.dump(2) << "\n";
        } else {
            for (const ResidualEntry& e : rep.equations) {
                std::cout << "residual " << e.equation << ": ";
                if (e.zero)
                    std::cout << "0\n";
                else
                    std::cout << e.offending << "\n";
            }
            std::cout << (rep.all_zero() ? "system satisfied" : "system violated") << "\n";
        }
        return rep.all_zero() ? 0 : 1;
    }
    const TruncatedSeries T = iterate_T(order);
    if (as_json) {
        json j = series_to_json(T);
        j["format"] = kFormatTag;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << series_to_string(T) << "\n";
    }
    return 0;
}

int run_verify(int nmax, int workers, bool as_json) {
    const VerifyReport rep = verify_all(nmax, workers);
    if (as_json) {
        json j = report_to_json(rep);
        j["format"] = kFormatTag;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << report_to_text(rep);
    }
    return rep.all_pass() ? 0 : 1;
}

int run_render(const std::string& input, const std::string& out) {
    write_output(out, render_svg(fish_from_input(read_input(input))));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-stack-sortable permutations, fighting fish, and the bijection between them"};
    app.require_subcommand(1);

    std::string input, format = "text", out, method = "brute";
    int n = 1, order = 4, nmax = 6, workers = 1;
    bool check_flag = false, json_flag = false;

    CLI::App* sort_cmd = app.add_subcommand("sort", "apply the stack-sorting pass S once");
    sort_cmd->add_option("input", input, "sequence, file, or - for stdin")->required();

    CLI::App* check_cmd = app.add_subcommand("check", "test two-stack sortability");
    check_cmd->add_option("input", input)->required();

    CLI::App* dec_cmd = app.add_subcommand("decompose", "split at the maximum (permutation) or wasp-waist (fish JSON)");
    dec_cmd->add_option("input", input)->required();
    dec_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* phi_cmd = app.add_subcommand("phi", "map a 2SSP to its fighting fish");
    phi_cmd->add_option("input", input)->required();
    phi_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "svg"}));
    phi_cmd->add_option("-o,--output", out, "write to file instead of stdout");

    CLI::App* inv_cmd = app.add_subcommand("phi-inverse", "map a fighting fish back to its 2SSP");
    inv_cmd->add_option("input", input)->required();
    inv_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* enum_cmd = app.add_subcommand("enumerate", "list all 2SSPs of one size");
    enum_cmd->add_option("-n,--n", n, "permutation size")->required()->check(CLI::Range(1, 10));
    enum_cmd->add_option("--method", method)->check(CLI::IsMember({"brute", "grammar"}));
    enum_cmd->add_option("--workers", workers)->check(CLI::Range(1, 64));
    enum_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* gf_cmd = app.add_subcommand("gf", "generating function by fixed-point iteration");
    gf_cmd->add_option("--order", order, "truncation order in t")->required()->check(CLI::Range(1, 10));
    gf_cmd->add_flag("--check-system", check_flag, "verify the catalytic equation system instead");
    gf_cmd->add_flag("--json", json_flag);

    CLI::App* ver_cmd = app.add_subcommand("verify", "run the exhaustive cross-check suite");
    ver_cmd->add_option("--max-n", nmax)->check(CLI::Range(1, 8));
    ver_cmd->add_option("--workers", workers)->check(CLI::Range(1, 64));
    ver_cmd->add_flag("--json", json_flag);

    CLI::App* ren_cmd = app.add_subcommand("render", "draw a fish (JSON) or a 2SSP's image as SVG");
    ren_cmd->add_option("input", input)->required();
    ren_cmd->add_option("-o,--output", out, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sort_cmd->parsed()) return run_sort(input);
        if (check_cmd->parsed()) return run_check(input);
        if (dec_cmd->parsed()) return run_decompose(input, format);
        if (phi_cmd->parsed()) return run_phi(input, format, out);
        if (inv_cmd->parsed()) return run_phi_inverse(input, format);
        if (enum_cmd->parsed()) return run_enumerate(n, method, workers, format);
        if (gf_cmd->parsed()) return run_gf(order, check_flag, json_flag);
        if (ver_cmd->parsed()) return run_verify(nmax, workers, json_flag);
        if (ren_cmd->parsed()) return run_render(input, out);
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
