#ifndef FFCHAIN_CHAIN_HPP
#define FFCHAIN_CHAIN_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ffchain/field.hpp"
#include "ffchain/poly.hpp"

namespace ffchain {

/// Ordered list (f_1, ..., f_beta) of bases driving a chain. All bases share
/// one characteristic and one degree; step i of a chain inverts under
/// f_((i-1) mod beta)+1, so two bases alternate f1, f2, f1, f2, ...
class BasisSchedule {
public:
    explicit BasisSchedule(std::vector<IrreduciblePoly> bases);
    BasisSchedule(IrreduciblePoly f1, IrreduciblePoly f2);

    std::size_t beta() const noexcept { return bases_.size(); }
    const std::vector<IrreduciblePoly>& bases() const noexcept { return bases_; }
    /// Basis applied at 1-based step i.
    const IrreduciblePoly& basis_for_step(std::uint64_t i) const {
        return bases_[static_cast<std::size_t>((i - 1) % bases_.size())];
    }
    std::uint32_t characteristic() const noexcept { return bases_.front().characteristic(); }
    unsigned degree() const noexcept { return bases_.front().degree(); }
    bool pairwise_distinct() const noexcept;

private:
    std::vector<IrreduciblePoly> bases_;
};

/// The k-chain (a_0, ..., a_k): a_0 = start, a_i = inv(a_{i-1}, basis_for_step(i)).
struct Chain {
    Poly start;
    BasisSchedule schedule;
    std::vector<Poly> elements; // k + 1 entries
    std::uint64_t k() const noexcept { return elements.size() - 1; }
};

Chain k_chain(const Poly& a, const BasisSchedule& schedule, std::uint64_t k);

/// One alternating cycle of the two-basis walk, held as element indices in
/// canonical orientation: minimum index first, second entry its f1-inverse.
/// Always even length >= 4 and free of repeats when f1 != f2.
struct Cycle {
    std::vector<std::uint64_t> elements;
    std::uint64_t length() const noexcept { return elements.size(); }
};

/// The decomposition of all non-constant elements into disjoint cycles under a
/// pair of distinct bases, cycles ordered by their minimum element index.
struct CyclePartition {
    IrreduciblePoly f1;
    IrreduciblePoly f2;
    std::vector<Cycle> cycles;
    std::uint64_t covered() const noexcept;
};

Cycle find_cycle(const Poly& a, const IrreduciblePoly& f1, const IrreduciblePoly& f2);
CyclePartition partition(const IrreduciblePoly& f1, const IrreduciblePoly& f2,
                         std::uint64_t guard = kDefaultGuard);

/// True iff the cycle of a under (f1,f2) read backwards equals the cycle of a
/// under (f2,f1), both started at a.
bool reverse_consistency_check(const Poly& a, const IrreduciblePoly& f1, const IrreduciblePoly& f2);

/// A permutation of all p^n element indices: 0 fixed, constants sent to their
/// scalar inverses, every non-constant cycle traversed in a fixed direction.
struct Permutation {
    std::uint32_t p = 2;
    unsigned n = 0;
    std::vector<std::uint64_t> mapping;                 // size p^n
    std::vector<std::vector<std::uint64_t>> cycles;     // directed non-constant cycles
    std::vector<std::uint64_t> fixed_points() const;
    bool is_bijection() const;
};

/// Canonical orientation: the minimum element of each cycle maps to its f1-inverse.
Permutation build_permutation(const IrreduciblePoly& f1, const IrreduciblePoly& f2,
                              std::uint64_t guard = kDefaultGuard);
/// Per-cycle orientation: reverse_cycle[i] flips the traversal direction of the
/// i-th canonical cycle; the vector length must equal the number of cycles.
Permutation build_permutation(const IrreduciblePoly& f1, const IrreduciblePoly& f2,
                              const std::vector<bool>& reverse_cycle,
                              std::uint64_t guard = kDefaultGuard);

/// Minimal-period chain returning to its start at schedule phase 0. Elements
/// may repeat inside the loop (only the (element, phase) states are distinct).
struct ClosedLoop {
    BasisSchedule schedule;
    std::vector<Poly> elements; // a_0 ... a_k with a_k == a_0
    std::uint64_t k() const noexcept { return elements.size() - 1; }
    /// Element index -> number of appearances among a_0 ... a_{k-1}.
    std::map<std::uint64_t, std::uint32_t> multiplicities() const;
};

ClosedLoop find_closed_loop(const Poly& a, const BasisSchedule& schedule);

/// Every distinct closed loop of a schedule (one per orbit of the
/// (element, phase) state map), plus which loops each element appears in.
struct LoopEnumeration {
    std::vector<ClosedLoop> loops;
    /// element index -> list of (position in loops, multiplicity inside that loop)
    std::map<std::uint64_t, std::vector<std::pair<std::size_t, std::uint32_t>>> element_report;
};

LoopEnumeration enumerate_closed_loops(const BasisSchedule& schedule,
                                       std::uint64_t guard = kDefaultGuard);

} // namespace ffchain

#endif // FFCHAIN_CHAIN_HPP
