#include "ffchain/chain.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ffchain {

BasisSchedule::BasisSchedule(std::vector<IrreduciblePoly> bases) : bases_(std::move(bases)) {
    if (bases_.empty()) throw std::invalid_argument("BasisSchedule: needs at least one basis");
    for (const auto& f : bases_) {
        if (f.characteristic() != bases_.front().characteristic())
            throw std::invalid_argument("BasisSchedule: bases have mixed characteristics");
        if (f.degree() != bases_.front().degree())
            throw std::invalid_argument("BasisSchedule: bases have mixed degrees");
    }
}

BasisSchedule::BasisSchedule(IrreduciblePoly f1, IrreduciblePoly f2)
    : BasisSchedule(std::vector<IrreduciblePoly>{std::move(f1), std::move(f2)}) {}

bool BasisSchedule::pairwise_distinct() const noexcept {
    for (std::size_t i = 0; i < bases_.size(); ++i) {
        for (std::size_t j = i + 1; j < bases_.size(); ++j) {
            if (bases_[i] == bases_[j]) return false;
        }
    }
    return true;
}

namespace {

void require_chain_start(const Poly& a, const BasisSchedule& schedule, const char* who) {
    if (a.is_zero()) throw std::domain_error(std::string(who) + ": start element must be nonzero");
    if (a.characteristic() != schedule.characteristic())
        throw std::invalid_argument(std::string(who) + ": element characteristic does not match the bases");
    if (!(a.degree() < Degree::of(static_cast<int>(schedule.degree()))))
        throw std::invalid_argument(std::string(who) + ": element degree must be below n");
}

void require_nonconstant_start(const Poly& a, const char* who) {
    if (a.is_zero() || a.is_constant())
        throw std::domain_error(std::string(who) + ": start element must have degree >= 1");
}

void require_distinct_pair(const IrreduciblePoly& f1, const IrreduciblePoly& f2, const char* who) {
    if (f1.characteristic() != f2.characteristic() || f1.degree() != f2.degree())
        throw std::invalid_argument(std::string(who) + ": bases must share characteristic and degree");
    if (f1 == f2) throw std::domain_error(std::string(who) + ": bases must be distinct");
}

// Raw two-basis cycle walk from `start`, first step through f1. Returns the
// element sequence a_0 ... a_{k-1}; the walk closes because the inverse maps
// are two edge-disjoint perfect matchings on the non-constant elements.
std::vector<Poly> walk_cycle(const Poly& start, const IrreduciblePoly& f1,
                             const IrreduciblePoly& f2) {
    const std::uint64_t cap = field_order(f1.characteristic(), f1.degree());
    std::vector<Poly> elems{start};
    Poly cur = start;
    for (std::uint64_t i = 1;; ++i) {
        cur = inv(cur, (i % 2 == 1) ? f1 : f2);
        if (i % 2 == 0 && cur == start) break;
        elems.push_back(cur);
        if (i > cap)
            throw std::logic_error("walk_cycle: iteration cap exceeded; matchings are inconsistent");
    }
    return elems;
}

} // namespace

Chain k_chain(const Poly& a, const BasisSchedule& schedule, std::uint64_t k) {
    require_chain_start(a, schedule, "k_chain");
    std::vector<Poly> elems;
    elems.reserve(static_cast<std::size_t>(k) + 1);
    elems.push_back(a);
    for (std::uint64_t i = 1; i <= k; ++i) {
        elems.push_back(inv(elems.back(), schedule.basis_for_step(i)));
    }
    return Chain{a, schedule, std::move(elems)};
}

Cycle find_cycle(const Poly& a, const IrreduciblePoly& f1, const IrreduciblePoly& f2) {
    require_distinct_pair(f1, f2, "find_cycle");
    require_nonconstant_start(a, "find_cycle");
    require_chain_start(a, BasisSchedule(f1, f2), "find_cycle");

    // Locate the minimum element of a's cycle, then rewalk from there so the
    // result is in canonical orientation (minimum first, f1 step next).
    std::vector<Poly> raw = walk_cycle(a, f1, f2);
    const Poly* min_elem = &raw.front();
    for (const Poly& e : raw) {
        if (e.index() < min_elem->index()) min_elem = &e;
    }
    std::vector<Poly> canonical = walk_cycle(*min_elem, f1, f2);

    Cycle cycle;
    cycle.elements.reserve(canonical.size());
    for (const Poly& e : canonical) cycle.elements.push_back(e.index());
    return cycle;
}

std::uint64_t CyclePartition::covered() const noexcept {
    std::uint64_t total = 0;
    for (const auto& c : cycles) total += c.length();
    return total;
}

CyclePartition partition(const IrreduciblePoly& f1, const IrreduciblePoly& f2,
                         std::uint64_t guard) {
    require_distinct_pair(f1, f2, "partition");
    const std::uint32_t p = f1.characteristic();
    const std::uint64_t q = field_order(p, f1.degree());
    if (q > guard)
        throw std::length_error("partition: field order " + std::to_string(q) +
                                " exceeds enumeration guard " + std::to_string(guard));

    const std::vector<std::uint64_t> t1 = inverse_table(f1, guard);
    const std::vector<std::uint64_t> t2 = inverse_table(f2, guard);

    CyclePartition part{f1, f2, {}};
    std::vector<bool> visited(q, false);
    // Ascending start scan: the first unvisited element of a cycle is its
    // minimum, so each cycle comes out canonical and the list ordered.
    for (std::uint64_t start = p; start < q; ++start) {
        if (visited[start]) continue;
        Cycle cycle;
        std::uint64_t cur = start;
        std::uint64_t step = 1;
        do {
            visited[cur] = true;
            cycle.elements.push_back(cur);
            cur = (step % 2 == 1) ? t1[cur] : t2[cur];
            ++step;
        } while (!(cur == start && step % 2 == 1));
        part.cycles.push_back(std::move(cycle));
    }
    return part;
}

bool reverse_consistency_check(const Poly& a, const IrreduciblePoly& f1,
                               const IrreduciblePoly& f2) {
    require_distinct_pair(f1, f2, "reverse_consistency_check");
    require_nonconstant_start(a, "reverse_consistency_check");
    require_chain_start(a, BasisSchedule(f1, f2), "reverse_consistency_check");

    const std::vector<Poly> fwd = walk_cycle(a, f1, f2);
    const std::vector<Poly> bwd = walk_cycle(a, f2, f1);
    if (fwd.size() != bwd.size()) return false;
    const std::size_t k = fwd.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (bwd[i] != fwd[(k - i) % k]) return false;
    }
    return true;
}

std::vector<std::uint64_t> Permutation::fixed_points() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < mapping.size(); ++i) {
        if (mapping[i] == i) out.push_back(i);
    }
    return out;
}

bool Permutation::is_bijection() const {
    std::vector<bool> seen(mapping.size(), false);
    for (std::uint64_t v : mapping) {
        if (v >= mapping.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

namespace {

Permutation permutation_from_partition(const CyclePartition& part,
                                       const std::vector<bool>* reverse_cycle) {
    if (reverse_cycle && reverse_cycle->size() != part.cycles.size())
        throw std::invalid_argument("build_permutation: orientation vector has " +
                                    std::to_string(reverse_cycle->size()) + " entries for " +
                                    std::to_string(part.cycles.size()) + " cycles");
    const std::uint32_t p = part.f1.characteristic();
    const std::uint64_t q = field_order(p, part.f1.degree());

    Permutation sigma;
    sigma.p = p;
    sigma.n = part.f1.degree();
    sigma.mapping.resize(q);
    sigma.mapping[0] = 0;
    for (std::uint32_t c = 1; c < p; ++c) sigma.mapping[c] = scalar_inverse(c, Prime(p));

    for (std::size_t ci = 0; ci < part.cycles.size(); ++ci) {
        const auto& elems = part.cycles[ci].elements;
        const bool reversed = reverse_cycle && (*reverse_cycle)[ci];
        std::vector<std::uint64_t> directed(elems);
        if (reversed) std::reverse(directed.begin() + 1, directed.end());
        for (std::size_t i = 0; i < directed.size(); ++i) {
            sigma.mapping[directed[i]] = directed[(i + 1) % directed.size()];
        }
        sigma.cycles.push_back(std::move(directed));
    }
    return sigma;
}

} // namespace

Permutation build_permutation(const IrreduciblePoly& f1, const IrreduciblePoly& f2,
                              std::uint64_t guard) {
    return permutation_from_partition(partition(f1, f2, guard), nullptr);
}

Permutation build_permutation(const IrreduciblePoly& f1, const IrreduciblePoly& f2,
                              const std::vector<bool>& reverse_cycle, std::uint64_t guard) {
    return permutation_from_partition(partition(f1, f2, guard), &reverse_cycle);
}

std::map<std::uint64_t, std::uint32_t> ClosedLoop::multiplicities() const {
    std::map<std::uint64_t, std::uint32_t> counts;
    for (std::size_t i = 0; i + 1 < elements.size(); ++i) ++counts[elements[i].index()];
    return counts;
}

ClosedLoop find_closed_loop(const Poly& a, const BasisSchedule& schedule) {
    if (schedule.beta() < 2)
        throw std::invalid_argument("find_closed_loop: schedule needs beta >= 2");
    if (!schedule.pairwise_distinct())
        throw std::invalid_argument("find_closed_loop: bases must be pairwise distinct");
    require_nonconstant_start(a, "find_closed_loop");
    require_chain_start(a, schedule, "find_closed_loop");

    const std::uint32_t p = schedule.characteristic();
    const std::uint64_t q = field_order(p, schedule.degree());
    const std::uint64_t cap = schedule.beta() * (q - p);

    // Each step is a bijection on (element, phase) states, so the walk is
    // purely periodic: the first return to (a, phase 0) is the loop length.
    std::vector<Poly> elems{a};
    Poly cur = a;
    std::uint64_t i = 1;
    for (;; ++i) {
        cur = inv(cur, schedule.basis_for_step(i));
        elems.push_back(cur);
        if (cur == a && i % schedule.beta() == 0) break;
        if (i > cap) throw std::logic_error("find_closed_loop: iteration cap exceeded");
    }
    return ClosedLoop{schedule, std::move(elems)};
}

LoopEnumeration enumerate_closed_loops(const BasisSchedule& schedule, std::uint64_t guard) {
    if (schedule.beta() < 2)
        throw std::invalid_argument("enumerate_closed_loops: schedule needs beta >= 2");
    if (!schedule.pairwise_distinct())
        throw std::invalid_argument("enumerate_closed_loops: bases must be pairwise distinct");
    const std::uint32_t p = schedule.characteristic();
    const std::uint64_t q = field_order(p, schedule.degree());
    if (q > guard)
        throw std::length_error("enumerate_closed_loops: field order exceeds guard");

    const std::size_t beta = schedule.beta();
    const Prime prime(p);
    LoopEnumeration out;

    if (beta == 2) {
        // With two bases a closed loop is a simple cycle, and walking the same
        // cycle from an odd position reproduces it reversed; both directions
        // are one loop here, matching the unique cycle partition.
        const CyclePartition part = partition(schedule.bases()[0], schedule.bases()[1], guard);
        for (const auto& cycle : part.cycles) {
            ClosedLoop loop{schedule, {}};
            for (std::uint64_t e : cycle.elements) loop.elements.push_back(Poly::from_index(prime, e));
            loop.elements.push_back(Poly::from_index(prime, cycle.elements.front()));
            out.loops.push_back(std::move(loop));
        }
        for (std::size_t li = 0; li < out.loops.size(); ++li) {
            for (const auto& [elem, count] : out.loops[li].multiplicities()) {
                out.element_report[elem].emplace_back(li, count);
            }
        }
        return out;
    }

    std::vector<std::vector<std::uint64_t>> tables;
    tables.reserve(beta);
    for (const auto& f : schedule.bases()) tables.push_back(inverse_table(f, guard));

    // States (element, phase) partition into orbits; every orbit passes phase 0,
    // so scanning phase-0 starts in ascending element order hits each loop once
    // at its minimal start. Rotation-equivalent walks land in the same orbit.
    std::vector<bool> visited(q * beta, false);
    for (std::uint64_t start = p; start < q; ++start) {
        if (visited[start * beta]) continue;
        ClosedLoop loop{schedule, {}};
        std::uint64_t cur = start;
        std::size_t phase = 0;
        do {
            visited[cur * beta + phase] = true;
            loop.elements.push_back(Poly::from_index(prime, cur));
            cur = tables[phase][cur];
            phase = (phase + 1) % beta;
        } while (!(cur == start && phase == 0));
        loop.elements.push_back(Poly::from_index(prime, start));
        out.loops.push_back(std::move(loop));
    }

    for (std::size_t li = 0; li < out.loops.size(); ++li) {
        for (const auto& [elem, count] : out.loops[li].multiplicities()) {
            out.element_report[elem].emplace_back(li, count);
        }
    }
    return out;
}

} // namespace ffchain
