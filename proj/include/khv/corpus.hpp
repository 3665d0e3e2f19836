#pragma once

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "khv/corpus_data.hpp"
#include "khv/diagram.hpp"
#include "khv/errors.hpp"
#include "khv/expansion.hpp"
#include "khv/homology.hpp"
#include "khv/polynomials.hpp"

namespace khv {

/// One corpus record: a named PD code with optional golden expectations.
/// `expected_vn` is either empty or holds the rows v_0..v_5.
struct CorpusEntry {
    std::string name;
    std::string pd;
    bool has_kh = false;
    KhPoly expected_kh;
    std::vector<VnPoly> expected_vn;

    Diagram diagram() const { return Diagram::parse_pd(pd); }
};

/// A loaded corpus.
///
/// File format (version 1): line oriented, `#` starts a comment, the first
/// significant line is `version 1`.  Each record is
///
///   [name]
///   pd = X(a,b,c,d) ...     (or U terms)
///   kh = <Kh polynomial, canonical t/q text>            optional
///   v0..v5 = <v_n rows, exact-fraction t/x term lists>  optional, all six
class Corpus {
public:
    static constexpr int kFormatVersion = 1;

    static Corpus from_text(std::string_view text) {
        Corpus c;
        c.parse(text);
        return c;
    }

    static Corpus from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw CorpusFormat("cannot open corpus file '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return from_text(ss.str());
    }

    static const Corpus& embedded() {
        static const Corpus c = from_text(kEmbeddedCorpus);
        return c;
    }

    /// The embedded corpus, unless KHV_CORPUS points at an alternative file.
    static const Corpus& from_env_or_embedded() {
        static const Corpus c = [] {
            if (const char* path = std::getenv("KHV_CORPUS")) return from_file(path);
            return embedded();
        }();
        return c;
    }

    const std::vector<CorpusEntry>& entries() const { return entries_; }

    const CorpusEntry& load(const std::string& name) const {
        for (const auto& e : entries_)
            if (e.name == name) return e;
        throw UnknownKnot("no corpus entry named '" + name + "'");
    }

    bool contains(const std::string& name) const {
        for (const auto& e : entries_)
            if (e.name == name) return true;
        return false;
    }

    /// Names of the golden-table knots, in table order.
    static const std::vector<std::string>& table_knots() {
        static const std::vector<std::string> names{"3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"};
        return names;
    }

private:
    void parse(std::string_view text);
    std::vector<CorpusEntry> entries_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace detail

inline void Corpus::parse(std::string_view text) {
    CorpusEntry* current = nullptr;
    bool version_seen = false;
    size_t lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;

        line = detail::trim(line);
        if (line.empty() || line.front() == '#') continue;
        const std::string where = " (line " + std::to_string(lineno) + ")";

        if (!version_seen) {
            if (!line.starts_with("version"))
                throw CorpusFormat("corpus must start with a version line" + where);
            const auto v = detail::trim(line.substr(7));
            if (v != std::to_string(kFormatVersion))
                throw CorpusFormat("unsupported corpus version '" + std::string(v) + "'" + where);
            version_seen = true;
            continue;
        }

        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) throw CorpusFormat("bad section header" + where);
            entries_.push_back({});
            current = &entries_.back();
            current->name = std::string(line.substr(1, line.size() - 2));
            continue;
        }

        const size_t eq = line.find('=');
        if (eq == std::string_view::npos || current == nullptr)
            throw CorpusFormat("expected 'key = value'" + where);
        const std::string key{detail::trim(line.substr(0, eq))};
        const std::string value{detail::trim(line.substr(eq + 1))};
        try {
            if (key == "pd") {
                current->pd = value;
            } else if (key == "kh") {
                current->expected_kh = kh_from_text(value);
                current->has_kh = true;
            } else if (key.size() == 2 && key[0] == 'v' && key[1] >= '0' && key[1] <= '5') {
                const unsigned n = static_cast<unsigned>(key[1] - '0');
                if (current->expected_vn.size() != n)
                    throw CorpusFormat("v rows must appear in order v0..v5" + where);
                current->expected_vn.push_back(vn_from_text(value, n));
            } else {
                throw CorpusFormat("unknown key '" + key + "'" + where);
            }
        } catch (const MalformedTerm& e) {
            throw CorpusFormat(std::string(e.what()) + where);
        }
    }
    if (!version_seen) throw CorpusFormat("empty corpus");

    for (const auto& e : entries_) {
        if (e.pd.empty()) throw CorpusFormat("entry '" + e.name + "' has no pd line");
        if (!e.expected_vn.empty()) {
            if (e.expected_vn.size() != 6)
                throw CorpusFormat("entry '" + e.name + "' must carry all of v0..v5");
            if (!e.has_kh) throw CorpusFormat("entry '" + e.name + "' has v rows but no kh row");
            // The v0 row is the Khovanov polynomial itself with q renamed x.
            Laurent2<Rational> kh_as_x;
            for (const auto& [ij, c] : e.expected_kh.terms())
                kh_as_x.add(ij.first, ij.second, Rational(c));
            if (!(e.expected_vn[0].poly == kh_as_x))
                throw CorpusFormat("entry '" + e.name + "': v0 row does not equal the kh row");
        }
    }
}

// ---------------------------------------------------------------------------
// Golden-table verification
// ---------------------------------------------------------------------------

struct RowResult {
    std::string row;      // "Kh", "v0".."v5"
    bool pass = false;
    std::string witness;  // first mismatching term, empty when passing
};

struct EntryReport {
    std::string name;
    std::vector<RowResult> rows;
};

struct VerifyReport {
    std::vector<EntryReport> entries;

    int total() const {
        int t = 0;
        for (const auto& e : entries) t += static_cast<int>(e.rows.size());
        return t;
    }
    int passed() const {
        int p = 0;
        for (const auto& e : entries)
            for (const auto& r : e.rows) p += r.pass;
        return p;
    }
    bool all_pass() const { return passed() == total(); }
};

namespace detail {

template <class C>
std::string monomial_name(const std::pair<int, int>& key, char v1, char v2) {
    auto part = [](char v, int e) -> std::string {
        if (e == 0) return "";
        std::string s(1, v);
        if (e != 1) s += "^" + std::to_string(e);
        return s;
    };
    std::string a = part(v1, key.first), b = part(v2, key.second);
    if (a.empty() && b.empty()) return "1";
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + "*" + b;
}

template <class C>
std::string first_mismatch(const Laurent2<C>& got, const Laurent2<C>& want, char v1, char v2) {
    auto gi = got.terms().begin();
    auto wi = want.terms().begin();
    while (gi != got.terms().end() || wi != want.terms().end()) {
        if (wi == want.terms().end() || (gi != got.terms().end() && gi->first < wi->first)) {
            return "unexpected term " + format_coeff(gi->second) + " at " +
                   monomial_name<C>(gi->first, v1, v2);
        }
        if (gi == got.terms().end() || wi->first < gi->first) {
            return "missing term " + format_coeff(wi->second) + " at " + monomial_name<C>(wi->first, v1, v2);
        }
        if (!(gi->second == wi->second)) {
            return "at " + monomial_name<C>(gi->first, v1, v2) + ": expected " + format_coeff(wi->second) +
                   ", got " + format_coeff(gi->second);
        }
        ++gi;
        ++wi;
    }
    return "";
}

}  // namespace detail

/// Recompute the table rows for the seven golden knots and compare exactly
/// against the stored expectations.  Each v row additionally requires the
/// closed-form coefficients to match the direct-substitution series route.
inline VerifyReport verify_table(const Corpus& corpus = Corpus::embedded()) {
    VerifyReport report;
    for (const auto& name : Corpus::table_knots()) {
        const CorpusEntry& entry = corpus.load(name);
        EntryReport er;
        er.name = name;

        const Diagram d = entry.diagram();
        const BigradedRanks ranks = homology_ranks(d, Ring::rationals);
        const KhPoly kh = khovanov_polynomial(ranks);

        {
            RowResult r;
            r.row = "Kh";
            r.witness = detail::first_mismatch(kh, entry.expected_kh, 't', 'q');
            r.pass = r.witness.empty();
            er.rows.push_back(std::move(r));
        }

        const std::vector<VnPoly> series = series_reconstruct(kh, 5);
        for (unsigned n = 0; n <= 5; ++n) {
            RowResult r;
            r.row = "v" + std::to_string(n);
            const VnPoly closed = v_n(ranks, n);
            r.witness = detail::first_mismatch(closed.poly, entry.expected_vn[n].poly, 't', 'x');
            if (r.witness.empty() && !(series[n].poly == closed.poly))
                r.witness = "closed form and series substitution disagree: " +
                            detail::first_mismatch(series[n].poly, closed.poly, 't', 'x');
            r.pass = r.witness.empty();
            er.rows.push_back(std::move(r));
        }
        report.entries.push_back(std::move(er));
    }
    return report;
}

}  // namespace khv
