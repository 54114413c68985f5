// qchar: characters of half-integer weight q(n)-modules from the command line.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#ifdef QCHAR_SYSTEM_CLI11
#include <CLI/CLI.hpp>
#else
#include "CLI11.hpp"
#endif

#include "qchar/qchar.hpp"
#include "qchar/verify.hpp"

namespace {

using namespace qchar;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string weight;
    std::string a, b;
    std::string format = "json";
    std::string order = "chain";
    bool no_cache = false;
    bool inverse = false;
    std::size_t max_n = 4;
    std::string bound = "9/2";
    std::string sharp_bound = "7/2";
    int order_bound = 3;
};

std::optional<RecordCache> open_cache(const Options &opt) {
    if (opt.no_cache)
        return std::nullopt;
    if (const char *dir = std::getenv("QCHAR_CACHE_DIR"); dir && *dir)
        return RecordCache(dir);
    if (const char *xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return RecordCache(std::filesystem::path(xdg) / "qchar");
    if (const char *home = std::getenv("HOME"); home && *home)
        return RecordCache(std::filesystem::path(home) / ".cache" / "qchar");
    return std::nullopt;
}

CharacterRecord compute_record(RecordKind kind, const Weight &w) {
    const auto start = std::chrono::steady_clock::now();
    json meta = json::object();
    LaurentPoly ch(w.size());
    switch (kind) {
    case RecordKind::Euler:
        ch = euler_character(w);
        break;
    case RecordKind::Irreducible:
        ch = irreducible_character(w);
        break;
    case RecordKind::Kw: {
        KwResult r = kw_character(w);
        meta["mode"] = to_string(r.connectivity.mode);
        meta["both_predicates"] = r.connectivity.both;
        meta["uparrow"] = weight_to_json(r.connectivity.uparrow);
        meta["distance"] = r.connectivity.distance;
        meta["sign"] = r.sign;
        meta["r_factorial"] = r.r_factorial.str();
        meta["two_power"] = r.two_power.str();
        ch = std::move(r.character);
        break;
    }
    }
    meta["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return CharacterRecord::make(kind, w, std::move(ch), std::move(meta));
}

int run_character(RecordKind kind, const Options &opt) {
    const Weight w = parse_weight(opt.weight);
    const std::optional<RecordCache> cache = open_cache(opt);
    std::optional<CharacterRecord> rec;
    if (cache)
        rec = cache->load(kind, w);
    if (!rec) {
        rec = compute_record(kind, w);
        if (cache) {
            try {
                cache->store(*rec);
            } catch (const std::exception &e) {
                std::cerr << "warning: cache not written: " << e.what() << "\n";
            }
        }
    }
    if (opt.format == "table") {
        std::cout << "kind: " << to_string(rec->kind) << "\nweight: " << rec->weight.to_string()
                  << "\ndimension: " << rec->dimension.str() << "\n";
        for (const auto &[key, value] : rec->metadata.items())
            std::cout << key << ": " << value.dump() << "\n";
        std::cout << format_table(rec->character);
    } else {
        std::cout << canonical_dump(to_json(*rec));
    }
    return kExitOk;
}

int run_decompose(const Options &opt) {
    const Weight w = parse_weight(opt.weight);
    if (!w.is_half_integer() || !is_dominant(w))
        throw DomainError("decompose: weight must be half-integer dominant");
    const auto entries = opt.inverse ? b_expansion(w) : decompose_euler(w);
    if (opt.format == "table") {
        std::cout << (opt.inverse ? "[L(" : "[E(") << w.to_string() << ")] =\n";
        for (const TransitionEntry &e : entries) {
            std::cout << "  " << (e.coeff < 0 ? "- " : "+ ") << (e.coeff < 0 ? -e.coeff : e.coeff)
                      << (opt.inverse ? " [E(" : " [L(") << e.mu.to_string() << ")]";
            if (e.theta) {
                std::cout << "  theta=(";
                for (std::size_t k = 0; k < e.theta->size(); ++k)
                    std::cout << (k ? "," : "") << (*e.theta)[k];
                std::cout << ")";
            }
            std::cout << "\n";
        }
    } else {
        std::cout << to_json(entries).dump(2) << "\n";
    }
    return kExitOk;
}

int run_order(const Options &opt) {
    const Weight a = parse_weight(opt.a);
    const Weight b = parse_weight(opt.b);
    bool result = false;
    std::string symbol;
    json extra = json::object();
    if (opt.order == "chain") {
        result = succ_chain_oracle(a, b);
        symbol = "≽";
    } else if (opt.order == "wt") {
        result = succeq(a, b);
        symbol = "⪰";
    } else {
        const SignedSequence f = a.is_half_integer() ? natural(a) : flat(a);
        const SignedSequence g = b.is_half_integer() ? natural(b) : flat(b);
        extra["a_sequence"] = f.to_string();
        extra["b_sequence"] = g.to_string();
        // weights in different Z^{p|q} are incomparable
        result = f.p() == g.p() && succeq_a(f, g);
        symbol = "⪰_a";
    }
    const std::string verdict = std::string("a ") + symbol + " b: " + (result ? "true" : "false");
    if (opt.format == "table") {
        std::cout << verdict << "\n";
    } else {
        json out = {{"order", opt.order}, {"a", a.to_string()}, {"b", b.to_string()},
                    {"result", result}, {"verdict", verdict}};
        out.update(extra);
        std::cout << out.dump(2) << "\n";
    }
    return kExitOk;
}

int bound_to_doubled(const std::string &text) {
    const Weight w = parse_weight(text);
    if (w.size() != 1)
        throw ParseError("bound must be a single value");
    return std::abs(w.doubled(0));
}

int run_verify(const Options &opt) {
    verify::Config cfg;
    cfg.max_n = opt.max_n;
    cfg.order_bound = opt.order_bound;
    cfg.sharp_bound2 = bound_to_doubled(opt.sharp_bound);
    cfg.character_bound2 = bound_to_doubled(opt.bound);
    bool ok = true;
    verify::run_all(cfg, [&](const verify::CriterionResult &r) {
        ok = ok && r.passed;
        std::cout << verify::format_line(r) << std::endl;
    });
    return ok ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"qchar: characters of finite-dimensional half-integer weight q(n)-modules"};
    app.require_subcommand(1);
    Options opt;

    auto add_weight_command = [&](const std::string &name, const std::string &help) {
        CLI::App *cmd = app.add_subcommand(name, help);
        cmd->add_option("-w,--weight", opt.weight, "weight, e.g. \"3/2,-3/2\"")->required();
        cmd->add_option("--format", opt.format, "json or table")
            ->check(CLI::IsMember({"json", "table"}));
        return cmd;
    };

    CLI::App *euler_cmd = add_weight_command("euler", "character of the Euler characteristic E(lambda)");
    CLI::App *irr_cmd = add_weight_command("irr", "character of the irreducible L(lambda)");
    CLI::App *kw_cmd = add_weight_command("kw", "closed-form character for connected/disconnected weights");
    for (CLI::App *cmd : {euler_cmd, irr_cmd, kw_cmd})
        cmd->add_flag("--no-cache", opt.no_cache, "do not read or write the record cache");
    CLI::App *decompose_cmd = add_weight_command("decompose", "[E(lambda)] in terms of irreducibles");
    decompose_cmd->add_flag("--inverse", opt.inverse, "print [L(lambda)] in terms of Euler characteristics");

    CLI::App *order_cmd = app.add_subcommand("order", "compare two weights in a Bruhat order");
    order_cmd->add_option("-a", opt.a, "first weight")->required();
    order_cmd->add_option("-b", opt.b, "second weight")->required();
    order_cmd->add_option("--order", opt.order, "chain, wt or gl")
        ->check(CLI::IsMember({"chain", "wt", "gl"}));
    order_cmd->add_option("--format", opt.format, "json or table")->check(CLI::IsMember({"json", "table"}));

    CLI::App *verify_cmd = app.add_subcommand("verify", "run the cross-verification suite");
    verify_cmd->add_option("--max-n", opt.max_n, "largest rank checked")->check(CLI::Range(1, 6));
    verify_cmd->add_option("--bound", opt.bound, "largest |entry| for the character checks");
    verify_cmd->add_option("--sharp-bound", opt.sharp_bound, "largest |entry| for the sharp/natural check");
    verify_cmd->add_option("--order-bound", opt.order_bound, "largest |entry| for the integer order checks")
        ->check(CLI::Range(0, 10));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (euler_cmd->parsed())
            return run_character(RecordKind::Euler, opt);
        if (irr_cmd->parsed())
            return run_character(RecordKind::Irreducible, opt);
        if (kw_cmd->parsed())
            return run_character(RecordKind::Kw, opt);
        if (decompose_cmd->parsed())
            return run_decompose(opt);
        if (order_cmd->parsed())
            return run_order(opt);
        if (verify_cmd->parsed())
            return run_verify(opt);
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MixedWeight &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
