#pragma once

#include <cstdint>
#include <string>

#include "iim/generator.hpp"
#include "iim/graph.hpp"
#include "iim/report.hpp"

namespace iim {

/// Exhaustive spectral-gap check over IIM_steps(seed): the gap of every
/// generated graph, computed on its non-isolated part, stays >= 1/15.
VerificationReport verify_spectral_gap(const Graph& seed, const std::string& seed_name, int steps,
                                       int workers = 1, int budget_bits = kDefaultBitBudget);

/// Exhaustive one-step diameter theorem: connected H obey
/// max{diam(G),5} (connected G) or 6 (disconnected G). steps > 1 checks the
/// corollary bound max{diam(G),6} exhaustively instead.
VerificationReport verify_diameter(const Graph& seed, const std::string& seed_name, int steps = 1,
                                   int budget_bits = kDefaultBitBudget);

/// Sampled corollary check at larger depths.
VerificationReport verify_diameter_corollary(const Graph& seed, const std::string& seed_name,
                                             int steps, int samples, double clone_probability,
                                             std::uint64_t rng_seed);

/// Exhaustive domination bound for complete seeds: dom(H) <= 4 when
/// a_l(H) = 0, else a_l(H) + 3, and the constructive set stays within the
/// same bound. Reports the worst margin dom(H) - bound(H), which must be <= 0.
VerificationReport verify_domination_kn(const Graph& seed, const std::string& seed_name, int steps,
                                        int budget_bits = kDefaultBitBudget);

/// Exhaustive general domination bound dom(H) <= dom(G) + b(G) + 3 for seeds
/// with dom(G) >= 2.
VerificationReport verify_domination_general(const Graph& seed, const std::string& seed_name,
                                             int steps, int budget_bits = kDefaultBitBudget);

/// Persistence of a dual dominating set of the seed through every graph in
/// IIM_steps(seed).
VerificationReport verify_dual_domination_persistence(const Graph& seed,
                                                      const std::string& seed_name,
                                                      const VertexSet& dual_set, int steps,
                                                      int budget_bits = kDefaultBitBudget);

/// Exhaustive clique lower bound over IIM_steps(K_1) with exact omega.
VerificationReport verify_clique_bound(int steps, int budget_bits = kDefaultBitBudget);

/// Sampled clique lower bound at depths beyond the enumeration budget,
/// decided exactly per sample by bounded clique search.
VerificationReport verify_clique_bound_sampled(int steps, int samples, double clone_probability,
                                               std::uint64_t rng_seed);

/// Every graph in IIM_steps(K_1) contains a non-adjacent triple of K_2's.
VerificationReport verify_triple_exists(int steps, int budget_bits = kDefaultBitBudget);

/// The triple growth step: on random small hosts with a detected triple, all
/// eight witness clone/anticlone combinations (random elsewhere) produce a
/// valid grown triple.
VerificationReport verify_grow_triple(int instances, std::uint64_t rng_seed);

/// Expander-Mixing residual >= -1e-6 over enumerated graphs and random
/// vertex subsets.
VerificationReport verify_mixing(const Graph& seed, const std::string& seed_name, int steps,
                                 int max_graphs, int subsets_per_graph, std::uint64_t rng_seed,
                                 int budget_bits = kDefaultBitBudget);

/// Minimum extensions from one-colored 2K1 use exactly l+1 colors with a
/// persisting rainbow pair, while the best graph in IIM_2(2K1) has chromatic
/// number 2.
VerificationReport verify_coloring_extension(int steps, int samples, std::uint64_t rng_seed);

/// Constructed instances of the sufficient condition: partition found, cycle
/// built and validated, exact solver agreement.
VerificationReport verify_ham_partition(int instances, std::uint64_t rng_seed);

/// Clone-ladder extraction and parity-guided search against the independent
/// embedding validator, for F in {P_3, 2K_1, C_4, K_3}.
VerificationReport verify_induced(int instances_per_pattern, std::uint64_t rng_seed);

/// Normalized-Laplacian spectra of K_2, K_3, K_4, C_4, P_3 against closed
/// forms.
VerificationReport verify_eigensolver_oracle();

struct CensusResult {
    std::uint64_t sequences = 0;
    /// one entry per isomorphism class: a witness sequence and the class size
    std::vector<std::pair<std::string, std::uint64_t>> classes;
};

/// Enumerates IIM_steps(seed) and groups the outcomes by canonical key
/// (sequence semantics collapse to isomorphism classes).
CensusResult isomorphism_census(const Graph& seed, int steps,
                                int budget_bits = kDefaultBitBudget);

}  // namespace iim
