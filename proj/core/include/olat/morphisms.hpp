#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "olat/lattice.hpp"
#include "olat/ortho.hpp"

namespace olat {

// Relation tags an embedding can be certified for.
enum class Cert { Sub01, Triangle, TriangleDual, Convex, SubOrtho };

std::string cert_name(Cert c);

// Injective element map between two lattices. Certificates accumulate
// monotonically: a tag is present only after its check has passed.
struct Embedding {
    LatticePtr source;
    LatticePtr target;
    std::vector<ElementId> map;
    std::set<Cert> certs;

    bool has(Cert c) const { return certs.count(c) != 0; }
};

struct MorphismError {
    enum class Kind {
        NotInjective,
        NotMeetPreserving,
        NotJoinPreserving,
        BoundsNotPreserved,
        NoGreatestBelow,
        NotDownwardClosed,
        NotConvex,
        PerpNotPreserved,
        PreconditionNotCertified,
    };
    Kind kind;
    ElementId x = -1;
    ElementId y = -1;
    ElementId z = -1;
    std::string message;
};

std::string describe(const MorphismError& e);

using EmbeddingResult = std::variant<Embedding, MorphismError>;

// {0,1}-sublattice check: preserves binary meet, binary join and bounds.
EmbeddingResult check_sub01(Embedding e);

struct TriangleResult {
    Embedding embedding;
    // Projection: for each target element the greatest image element
    // below it, reported as a source element.
    std::vector<ElementId> projection;
};

// Strong extension check: greatest-element projections exist and the
// image minus the top is downward closed in the target.
std::variant<TriangleResult, MorphismError> check_triangle(Embedding e);

// Same check on the dualized pair. The returned projection table gives,
// per target element, the least image element above it.
std::variant<TriangleResult, MorphismError> check_triangle_dual(Embedding e);

// Convexity in the bounds-excluding sense: whenever 0 < a <= x <= a' < 1
// with a, a' in the image, x is in the image too.
EmbeddingResult check_convex(Embedding e);

struct SupAgreementReport {
    ElementId source_sup;        // sup of A in the source
    ElementId target_sup;        // sup of image(A) in the target
    bool inequality_holds;       // image(source_sup) >= target_sup
    bool hypotheses_apply;       // image convex and source sup < 1
    bool equal;                  // image(source_sup) == target_sup
};

SupAgreementReport sup_agreement(const Embedding& e, std::span<const ElementId> subset);

// Ortholattice embedding commuting with perp.
EmbeddingResult check_subortholattice(const Ortholattice& source,
                                      const Ortholattice& target, Embedding e);

// Composition of composable embeddings; certificates are not carried
// over, re-run the checks on the result.
Embedding compose(const Embedding& first, const Embedding& second);

Embedding identity_embedding(LatticePtr lattice);

// Throwing conveniences for construction code.
Embedding require_sub01(Embedding e);
TriangleResult require_triangle(Embedding e);
TriangleResult require_triangle_dual(Embedding e);

}  // namespace olat
