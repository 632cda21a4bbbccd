#ifndef KOLAM_SPEC_HPP
#define KOLAM_SPEC_HPP

#include "kolam/errors.hpp"

namespace kolam {

/// How consecutive dots of the closed path are joined.
enum class ConnectionStyle {
    Straight,   ///< plain chords
    ConvexArc,  ///< circular arcs bulging away from the pattern center
    ConcaveArc, ///< circular arcs bulging toward the pattern center
};

const char* to_string(ConnectionStyle style);

/// Validated input pair (dots per arm, arm count) plus stroke styling.
///
/// A KolamSpec can only be obtained through make(), which rejects any
/// combination that does not describe a single-stroke pattern. Every value
/// of this type therefore satisfies dots >= 1, arms >= 1,
/// gcd(dots, arms) == 1, bulge in (0, 1) and dots*arms <= 2^31-1.
class KolamSpec {
public:
    static constexpr double kDefaultBulge = 0.3;

    /// Validates and builds a spec.
    /// Throws ZeroOrNegative, NotCoprime, BulgeOutOfRange or PatternTooLarge.
    static KolamSpec make(int dots, int arms,
                          ConnectionStyle style = ConnectionStyle::ConvexArc,
                          double bulge = kDefaultBulge);

    int dots() const { return dots_; }
    int arms() const { return arms_; }
    ConnectionStyle style() const { return style_; }
    double bulge() const { return bulge_; }

    /// Total dot count, dots * arms.
    long long cell_count() const { return static_cast<long long>(dots_) * arms_; }

private:
    KolamSpec(int dots, int arms, ConnectionStyle style, double bulge)
        : dots_(dots), arms_(arms), style_(style), bulge_(bulge) {}

    int dots_;
    int arms_;
    ConnectionStyle style_;
    double bulge_;
};

} // namespace kolam

#endif
