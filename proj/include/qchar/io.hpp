#pragma once

// Text and JSON forms: weight parsing, character and transition-list JSON,
// character records and the on-disk record cache.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "kl.hpp"
#include "laurent.hpp"
#include "weights.hpp"

namespace qchar {

using nlohmann::json;

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

inline int parse_int(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("cannot parse weight entry '" + std::string(whole) + "'");
    return v;
}

} // namespace detail

/// Parse "5/2,3/2,-5/2" or "2,0,-1". Denominators may be 1 or 2.
inline Weight parse_weight(std::string_view text) {
    std::vector<int> doubled;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view token =
            detail::trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        if (token.empty())
            throw ParseError("empty weight entry in '" + std::string(text) + "'");
        const std::size_t slash = token.find('/');
        if (slash == std::string_view::npos) {
            doubled.push_back(2 * detail::parse_int(token, token));
        } else {
            const int num = detail::parse_int(detail::trim(token.substr(0, slash)), token);
            const int den = detail::parse_int(detail::trim(token.substr(slash + 1)), token);
            if (den == 1)
                doubled.push_back(2 * num);
            else if (den == 2)
                doubled.push_back(num);
            else
                throw ParseError("denominator must be 1 or 2 in '" + std::string(token) + "'");
        }
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    try {
        return Weight::from_doubled(std::move(doubled));
    } catch (const DomainError &e) {
        throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
    }
}

/// Rational text for a half-unit value: 3 -> "3/2", 4 -> "2".
inline std::string half_units_to_string(int d) {
    return d % 2 ? std::to_string(d) + "/2" : std::to_string(d / 2);
}

inline json weight_to_json(const Weight &w) {
    return json(std::vector<int>(w.doubled().begin(), w.doubled().end()));
}

inline Weight weight_from_json(const json &j) { return Weight::from_doubled(j.get<std::vector<int>>()); }

/// {"n": n, "terms": [{"exp2": [...], "coeff": "decimal"}, ...]} in
/// lexicographic order of exp2.
inline json to_json(const LaurentPoly &f) {
    json terms = json::array();
    for (const auto &[e, c] : f.terms())
        terms.push_back({{"exp2", e}, {"coeff", c.str()}});
    return {{"n", f.nvars()}, {"terms", std::move(terms)}};
}

inline LaurentPoly laurent_from_json(const json &j) {
    LaurentPoly f(j.at("n").get<std::size_t>());
    for (const json &t : j.at("terms"))
        f.add_term(t.at("exp2").get<Exponent>(), Integer(t.at("coeff").get<std::string>()));
    return f;
}

inline json to_json(const std::vector<TransitionEntry> &entries) {
    json out = json::array();
    for (const TransitionEntry &e : entries) {
        json item = {{"weight", weight_to_json(e.mu)}, {"weight_text", e.mu.to_string()},
                     {"coeff", e.coeff}};
        item["theta"] = e.theta ? json(*e.theta) : json(nullptr);
        out.push_back(std::move(item));
    }
    return out;
}

inline std::vector<TransitionEntry> transitions_from_json(const json &j) {
    std::vector<TransitionEntry> out;
    for (const json &item : j) {
        TransitionEntry e{weight_from_json(item.at("weight")), item.at("coeff").get<long>(), std::nullopt};
        if (!item.at("theta").is_null())
            e.theta = item.at("theta").get<std::vector<int>>();
        out.push_back(std::move(e));
    }
    return out;
}

enum class RecordKind { Euler, Irreducible, Kw };

inline const char *to_string(RecordKind k) {
    switch (k) {
    case RecordKind::Euler:
        return "euler";
    case RecordKind::Irreducible:
        return "irreducible";
    case RecordKind::Kw:
        return "kw";
    }
    return "?";
}

/// Short name used in cache file names and CLI subcommands.
inline const char *short_name(RecordKind k) { return k == RecordKind::Irreducible ? "irr" : to_string(k); }

inline RecordKind record_kind_from_string(std::string_view s) {
    if (s == "euler")
        return RecordKind::Euler;
    if (s == "irreducible")
        return RecordKind::Irreducible;
    if (s == "kw")
        return RecordKind::Kw;
    throw ParseError("unknown record kind '" + std::string(s) + "'");
}

struct CharacterRecord {
    RecordKind kind;
    Weight weight;
    LaurentPoly character;
    Integer dimension;
    json metadata = json::object();

    static CharacterRecord make(RecordKind kind, Weight w, LaurentPoly ch, json metadata = json::object()) {
        Integer dim = specialize_ones(ch);
        return {kind, std::move(w), std::move(ch), std::move(dim), std::move(metadata)};
    }
};

inline json to_json(const CharacterRecord &r) {
    return {{"kind", to_string(r.kind)},
            {"weight", weight_to_json(r.weight)},
            {"weight_text", r.weight.to_string()},
            {"dimension", r.dimension.str()},
            {"character", to_json(r.character)},
            {"metadata", r.metadata}};
}

inline CharacterRecord record_from_json(const json &j) {
    CharacterRecord r{record_kind_from_string(j.at("kind").get<std::string>()),
                      weight_from_json(j.at("weight")), laurent_from_json(j.at("character")),
                      Integer(j.at("dimension").get<std::string>()), j.value("metadata", json::object())};
    if (r.dimension != specialize_ones(r.character))
        throw ParseError("record dimension does not match its character");
    return r;
}

/// Canonical bytes of a record: sorted keys, two-space indent, trailing newline.
inline std::string canonical_dump(const json &j) { return j.dump(2) + "\n"; }

/// kind_n{n}_{doubled entries joined by '_', '-' written 'm'}.json
inline std::string cache_file_name(RecordKind kind, const Weight &w) {
    std::string name = std::string(short_name(kind)) + "_n" + std::to_string(w.size());
    for (int d : w.doubled())
        name += "_" + (d < 0 ? "m" + std::to_string(-d) : std::to_string(d));
    return name + ".json";
}

/// One JSON file per record, written via a temporary file and rename.
class RecordCache {
  public:
    explicit RecordCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path &directory() const { return dir_; }

    std::filesystem::path path_for(RecordKind kind, const Weight &w) const {
        return dir_ / cache_file_name(kind, w);
    }

    std::optional<CharacterRecord> load(RecordKind kind, const Weight &w) const {
        std::ifstream in(path_for(kind, w));
        if (!in)
            return std::nullopt;
        try {
            CharacterRecord r = record_from_json(json::parse(in));
            if (r.kind != kind || r.weight != w)
                return std::nullopt;
            return r;
        } catch (const std::exception &) {
            return std::nullopt;
        }
    }

    void store(const CharacterRecord &r) const {
        std::filesystem::create_directories(dir_);
        const std::filesystem::path target = path_for(r.kind, r.weight);
        std::filesystem::path tmp = target;
        tmp += ".tmp" + std::to_string(std::random_device{}());
        {
            std::ofstream out(tmp, std::ios::binary);
            out << canonical_dump(to_json(r));
            if (!out)
                throw std::runtime_error("cannot write " + tmp.string());
        }
        std::filesystem::rename(tmp, target);
    }

  private:
    std::filesystem::path dir_;
};

/// Monomial table: one line per term, exponents as rationals.
inline std::string format_table(const LaurentPoly &f) {
    std::ostringstream out;
    out << "coeff";
    for (std::size_t k = 0; k < f.nvars(); ++k)
        out << "\tx" << k + 1;
    out << "\n";
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        out << it->second.str();
        for (int d : it->first)
            out << "\t" << half_units_to_string(d);
        out << "\n";
    }
    return out.str();
}

} // namespace qchar
