#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cospec/classifier.hpp"
#include "cospec/family.hpp"
#include "cospec/graph.hpp"
#include "cospec/spectra.hpp"

namespace cospec {

inline constexpr Int default_scan_cap = 24;

struct ScanHit {
    PineappleParams params;
    FamilySpec spec;

    friend bool operator==(const ScanHit&, const ScanHit&) = default;
};

struct ScanReport {
    std::string params_range;
    std::size_t specs_checked = 0;
    std::size_t pineapples_checked = 0;
    std::vector<ScanHit> found;
    std::vector<ScanHit> missed_by_classifier;
    std::vector<ScanHit> spurious_in_classifier;

    bool passed() const noexcept { return missed_by_classifier.empty() && spurious_in_classifier.empty(); }
};

// Calls fn(spec) for every valid spec of every family with main order <= max_order and isolated = 0.
inline void for_each_main_spec(Int max_order, const std::function<void(const FamilySpec&)>& fn) {
    for (Int t = 2; t <= max_order; ++t)
        for (Int m = 1; t + m <= max_order; ++m)
            for (Int n = 1; t + m + n <= max_order; ++n) fn(FamilySpec::two_component(t, m, n, 0));
    for (Int l = 1; l <= max_order; ++l)
        for (Int m = 1; l + m <= max_order; ++m)
            for (Int n = 2; l + m + n <= max_order; ++n) {
                fn(FamilySpec::p3_cc(l, m, n, 0));
                fn(FamilySpec::p3_mixed(l, m, n, 0));
                fn(FamilySpec::p3_cm(l, m, n, 0));
                fn(FamilySpec::p3_ccc(l, m, n, 0));
            }
    for (Int l = 1; l + 7 <= max_order; ++l) fn(FamilySpec::p4_a(l, 0));
    for (Int m = 1; m + 5 <= max_order; ++m)
        for (Int n = 1; m + n + 4 <= max_order; ++n) fn(FamilySpec::p4_b(m, n, 0));
    for (Int l = 1; l + 6 <= max_order; ++l)
        for (Int n = 1; l + n + 5 <= max_order; ++n) fn(FamilySpec::p4_c(l, n, 0));
    for (const auto& r : p4_table_shapes)
        for (Int n = 1; r[0] + r[1] + r[2] + n <= max_order; ++n) fn(FamilySpec::p4_table(r[0], r[1], n, r[2], 0));
    for (Int l = 1; l <= max_order; ++l)
        for (Int m = 1; l + m + 3 <= max_order; ++m)
            for (Int n = 1; l + m + n + 2 <= max_order; ++n) fn(FamilySpec::p5(l, m, n, 0));
}

// Brute-force certificate: realizes every structured candidate of a given order, computes its
// characteristic polynomial by Berkowitz and compares against every pineapple of that order.
// Polynomials of main components are cached across orders.
class FamilyScanner {
public:
    explicit FamilyScanner(Int cap = default_scan_cap) : cap_(cap) {
        if (cap < 5) throw std::invalid_argument("scan cap must be at least 5");
    }

    Int cap() const noexcept { return cap_; }

    ScanReport scan(Int order) {
        if (order < 1) throw std::invalid_argument("scan order must be positive");
        if (order > cap_) throw std::out_of_range("scan order " + std::to_string(order) + " exceeds cap " + std::to_string(cap_));
        ensure_main_specs(order);

        ScanReport rep;
        rep.params_range = "order " + std::to_string(order);

        std::map<IntPoly, std::vector<PineappleParams>> by_poly;
        std::vector<PineappleParams> pineapples;
        for (Int p = 3; p < order; ++p)
            for (Int k = 1; k <= p - 2; ++k) {
                PineappleParams pk{p, k, order - p};
                pineapples.push_back(pk);
                by_poly[char_poly(make_pineapple(pk))].push_back(pk);
            }
        rep.pineapples_checked = pineapples.size();

        std::map<PineappleParams, std::set<SpecKey>> scan_keys;
        std::set<SpecKey> seen;
        for (const auto& [spec, poly] : main_specs_) {
            Int m = main_order(spec);
            if (m > order) continue;
            FamilySpec full = spec;
            full.isolated = order - m;
            ++rep.specs_checked;
            auto key = spec_key(full);
            if (!seen.insert(key).second) continue;
            auto it = by_poly.find(poly.shifted(static_cast<std::size_t>(full.isolated)));
            if (it == by_poly.end()) continue;
            for (const auto& pk : it->second) {
                if (isomorphic_to_pineapple(full, pk)) continue;
                rep.found.push_back({pk, full});
                scan_keys[pk].insert(key);
            }
        }

        for (const auto& pk : pineapples) {
            auto cls = enumerate_mates(pk);
            std::map<SpecKey, FamilySpec> mine;
            for (const auto& m : cls.mates) mine.emplace(spec_key(m.spec), m.spec);
            const auto& theirs = scan_keys[pk];
            for (const auto& hit : rep.found)
                if (hit.params == pk && !mine.count(spec_key(hit.spec))) rep.missed_by_classifier.push_back(hit);
            for (const auto& [key, spec] : mine)
                if (!theirs.count(key)) rep.spurious_in_classifier.push_back({pk, spec});
        }
        return rep;
    }

private:
    void ensure_main_specs(Int order) {
        if (order <= built_to_) return;
        for_each_main_spec(order, [&](const FamilySpec& s) {
            if (main_order(s) <= built_to_) return;
            main_specs_.emplace_back(s, char_poly(realize(s)));
        });
        built_to_ = order;
    }

    Int cap_;
    Int built_to_ = 0;
    std::vector<std::pair<FamilySpec, IntPoly>> main_specs_;
};

inline ScanReport exhaustive_family_scan(Int order, Int cap = default_scan_cap) {
    FamilyScanner s(cap);
    return s.scan(order);
}

enum class ImpossibleCase {
    KcKde,   // K_c ∪ K_{d,e} ∪ aK_1 with c, d, e >= 2
    P4_lmns  // all-clique P4 types of the finite exceptional set
};

// Exceptional all-clique P4 types (l,m,n,s).
inline constexpr std::array<std::array<Int, 4>, 8> p4_clique_exceptions{{
    {2, 2, 2, 7}, {2, 2, 3, 4}, {2, 2, 6, 3}, {2, 3, 2, 5}, {2, 3, 4, 3}, {2, 5, 2, 4}, {2, 5, 3, 3}, {3, 2, 2, 3},
}};

struct ImpossibilityHit {
    PineappleParams params;
    std::string graph;
};

// Every graph of the case up to max_order that is cospectral with some pineapple.
inline std::vector<ImpossibilityHit> impossibility_hits(ImpossibleCase which, Int max_order = default_scan_cap) {
    std::map<Int, std::map<IntPoly, std::vector<PineappleParams>>> pine;
    auto pineapples_of = [&](Int order) -> const std::map<IntPoly, std::vector<PineappleParams>>& {
        auto it = pine.find(order);
        if (it != pine.end()) return it->second;
        auto& m = pine[order];
        for (Int p = 3; p < order; ++p)
            for (Int k = 1; k <= p - 2; ++k) {
                PineappleParams pk{p, k, order - p};
                m[char_poly(make_pineapple(pk))].push_back(pk);
            }
        return m;
    };
    std::vector<ImpossibilityHit> hits;
    auto test = [&](const IntPoly& main, Int main_order, const std::string& name) {
        for (Int a = 0; main_order + a <= max_order; ++a) {
            const auto& polys = pineapples_of(main_order + a);
            auto it = polys.find(main.shifted(static_cast<std::size_t>(a)));
            if (it == polys.end()) continue;
            for (const auto& pk : it->second) hits.push_back({pk, name + " ∪ " + std::to_string(a) + "K_1"});
        }
    };
    if (which == ImpossibleCase::KcKde) {
        for (Int c = 2; c + 4 <= max_order; ++c)
            for (Int d = 2; c + d + 2 <= max_order; ++d)
                for (Int e = d; c + d + e <= max_order; ++e) {
                    Graph g = disjoint_union({make_complete(static_cast<std::size_t>(c)), make_mixed_extension(MixedExtension{-d, -e})}, 0);
                    test(char_poly(g), c + d + e,
                         "K_" + std::to_string(c) + " ∪ K_{" + std::to_string(d) + "," + std::to_string(e) + "}");
                }
    } else {
        for (const auto& t : p4_clique_exceptions) {
            MixedExtension me{t[0], t[1], t[2], t[3]};
            if (me.order() > max_order) continue;
            test(char_poly(make_mixed_extension(me)), me.order(), "P4 " + me.to_string());
        }
    }
    return hits;
}

inline bool assert_impossible(ImpossibleCase which, Int max_order = default_scan_cap) {
    return impossibility_hits(which, max_order).empty();
}

struct IntRange {
    Int lo = 0;
    Int hi = -1;

    Int size() const noexcept { return hi >= lo ? hi - lo + 1 : 0; }
};

struct CensusRow {
    PineappleParams params;
    Classification result;
};

struct CensusTable {
    Int p = 0;
    IntRange k_range;
    IntRange q_range;
    std::vector<CensusRow> rows;  // k-major, then q

    std::size_t das_count() const {
        return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const CensusRow& r) { return r.result.das(); }));
    }
    std::size_t non_das_count() const { return rows.size() - das_count(); }
};

// Runs fn(i) for i in [0, count) on up to `workers` threads; rethrows the first exception.
inline void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, count); ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next = count;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

inline CensusTable census(Int p, IntRange k_range, IntRange q_range, unsigned parallelism = 1,
                          const ClassifyOptions& options = {}) {
    if (k_range.lo < 1 || k_range.hi > p - 2 || k_range.lo > k_range.hi)
        throw std::invalid_argument("census: k range must satisfy 1 <= k_min <= k_max <= p-2");
    if (q_range.lo < 1 || q_range.lo > q_range.hi) throw std::invalid_argument("census: q range must satisfy 1 <= q_min <= q_max");
    CensusTable table{p, k_range, q_range, {}};
    for (Int k = k_range.lo; k <= k_range.hi; ++k)
        for (Int q = q_range.lo; q <= q_range.hi; ++q) table.rows.push_back({PineappleParams{p, k, q}, {}});
    parallel_for(table.rows.size(), parallelism, [&](std::size_t i) {
        table.rows[i].result = enumerate_mates(table.rows[i].params, options);
    });
    return table;
}

} // namespace cospec
