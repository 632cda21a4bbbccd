#ifndef KOLAM_ERRORS_HPP
#define KOLAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kolam {

/// Base class for all domain errors raised by the library.
class KolamError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// gcd(dots, arms) != 1: the pattern would decompose into several loops.
class NotCoprime : public KolamError {
public:
    NotCoprime(int dots, int arms, int gcd)
        : KolamError("invalid kolam spec: gcd(" + std::to_string(dots) + ", " +
                     std::to_string(arms) + ") = " + std::to_string(gcd) +
                     " (dots and arms must be coprime)"),
          dots(dots), arms(arms), gcd(gcd) {}

    int dots;
    int arms;
    int gcd;
};

class ZeroOrNegative : public KolamError {
public:
    ZeroOrNegative(int dots, int arms)
        : KolamError("invalid kolam spec: dots = " + std::to_string(dots) +
                     ", arms = " + std::to_string(arms) +
                     " (both must be >= 1)"),
          dots(dots), arms(arms) {}

    int dots;
    int arms;
};

class BulgeOutOfRange : public KolamError {
public:
    explicit BulgeOutOfRange(double bulge)
        : KolamError("invalid kolam spec: bulge = " + std::to_string(bulge) +
                     " (must lie strictly between 0 and 1)"),
          bulge(bulge) {}

    double bulge;
};

/// dots * arms exceeds the supported size cap (2^31 - 1 cells).
class PatternTooLarge : public KolamError {
public:
    PatternTooLarge(int dots, int arms)
        : KolamError("invalid kolam spec: " + std::to_string(dots) + " x " +
                     std::to_string(arms) + " dots exceed the 2^31-1 cell limit"),
          dots(dots), arms(arms) {}

    int dots;
    int arms;
};

/// A stroke whose start and end coincide (only reachable for dots = arms = 1).
class DegenerateChord : public KolamError {
public:
    DegenerateChord() : KolamError("degenerate chord: stroke start equals stroke end") {}
};

class NonFiniteCoordinate : public KolamError {
public:
    NonFiniteCoordinate() : KolamError("stroke list contains a non-finite coordinate") {}
};

class EmptyStrokeList : public KolamError {
public:
    EmptyStrokeList() : KolamError("cannot render an empty stroke list") {}
};

class InvalidRenderConfig : public KolamError {
public:
    explicit InvalidRenderConfig(const std::string& what)
        : KolamError("invalid render config: " + what) {}
};

/// File-system failure while writing CLI outputs.
class IoError : public KolamError {
public:
    explicit IoError(const std::string& what) : KolamError("i/o error: " + what) {}
};

} // namespace kolam

#endif
