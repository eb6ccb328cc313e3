#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "homalg/error.hpp"
#include "homalg/graphs.hpp"
#include "homalg/witness.hpp"

namespace homalg {

/// sigma[i] is the image of vertex i.
using VertexBijection = std::vector<std::size_t>;

enum class Verdict { Iso, NonIso };

struct IsoCertificate {
    Verdict verdict = Verdict::NonIso;
    VertexBijection sigma;                // Iso only
    std::optional<WitnessResult> witness;  // NonIso; empty if none was found within bounds

    bool iso() const noexcept { return verdict == Verdict::Iso; }
};

/// True iff sigma is a bijection V(H) -> V(H') preserving alpha and beta.
bool is_isomorphism(const WeightedGraph& h, const WeightedGraph& hp, const VertexBijection& sigma);

/// Backtracking over partial bijections with weight pruning. Throws Budget
/// when m exceeds limits.oracle_max_vertices.
std::vector<VertexBijection> enumerate_isomorphisms(const WeightedGraph& h, const WeightedGraph& hp,
                                                    const Limits& limits = {});
std::vector<VertexBijection> enumerate_automorphisms(const WeightedGraph& h, const Limits& limits = {});

/// phi(i) = phi(j) iff psi(i) = psi(j).
bool same_type(const LabelMap& phi, const LabelMap& psi);

/// Constructive recovery for highly surjective pinnings. Requires H twin-free,
/// m >= m' and |phi^{-1}(u)| >= 4m^2 for every u (PreconditionViolated
/// otherwise). Either returns Iso(sigma) with psi = sigma o phi, or NonIso
/// with a simple k-labeled G_kappa / G_lambda_tau witness.
IsoCertificate recover_isomorphism(const WeightedGraph& h, const WeightedGraph& hp, const LabelMap& phi,
                                   const LabelMap& psi, const Limits& limits = {});

enum class DecideMode { Oracle, Constructive, Both };

using WitnessSearch = std::function<std::optional<WitnessResult>(
    const WeightedGraph&, const WeightedGraph&, const LabelMap&, const LabelMap&)>;

struct DecideOptions {
    DecideMode mode = DecideMode::Both;
    Limits limits;
    WitnessOptions witness;
    /// Replaces find_witness for NonIso certificates when set.
    WitnessSearch search;
};

/// Is there an isomorphism sigma: H -> H' with psi = sigma o phi?
/// Oracle mode searches all isomorphisms; Constructive mode extends phi to a
/// highly surjective eta and runs recover_isomorphism against each candidate
/// extension of psi. Both runs the two and throws SeparationFailure if they
/// disagree. NonIso witnesses are k-labeled and come from the witness search
/// unless the constructive run produced one directly.
IsoCertificate decide_pinned_iso(const WeightedGraph& h, const WeightedGraph& hp, const LabelMap& phi,
                                 const LabelMap& psi, const DecideOptions& options = {});

/// For graphs whose vertex weights are all 1: contract both sides and decide
/// on the contractions. class_sigma maps twin classes of H to those of H'.
struct TwinLevelResult {
    IsoCertificate certificate;
    std::vector<std::vector<std::size_t>> classes_a;
    std::vector<std::vector<std::size_t>> classes_b;
    VertexBijection class_sigma;
};

TwinLevelResult decide_twin_level(const WeightedGraph& h, const WeightedGraph& hp, const LabelMap& phi,
                                  const LabelMap& psi, const DecideOptions& options = {});

}  // namespace homalg
