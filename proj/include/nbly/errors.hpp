#pragma once

#include <stdexcept>
#include <string>

namespace nbly {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateSpan : Error { using Error::Error; };
struct NotSeparable : Error { using Error::Error; };

struct TooFewVertices : Error { using Error::Error; };
struct DegeneratePosition : Error { using Error::Error; };
struct NotAllVertices : Error { using Error::Error; };

struct NotStacked : Error { using Error::Error; };
struct NotUniversalEdge : Error { using Error::Error; };
struct DegenerateQuotient : Error { using Error::Error; };

struct PrefixNotNeighbourly : Error {
    int prefix;
    explicit PrefixNotNeighbourly(int m)
        : Error("prefix P_" + std::to_string(m) + " is not neighbourly"), prefix(m) {}
};
struct NotLinked : Error { using Error::Error; };
struct NotSimplyLinked : Error { using Error::Error; };
struct AmbiguousLink : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };

struct Infeasible : Error { using Error::Error; };
struct PostconditionFailed : Error { using Error::Error; };

struct NotApex : Error { using Error::Error; };
struct NotInterior : Error { using Error::Error; };

struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

} // namespace nbly
