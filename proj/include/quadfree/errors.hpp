#ifndef QUADFREE_ERRORS_HPP
#define QUADFREE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quadfree {

// Root of the library's error hierarchy. Everything the library throws
// derives from this, so callers can catch one type at the boundary.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---- field construction / arithmetic ------------------------------------
class NotPrimePower : public Error {
public:
    explicit NotPrimePower(const std::string& what) : Error(what) {}
};

class FieldMismatch : public Error {
public:
    explicit FieldMismatch(const std::string& what) : Error(what) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// ---- graph construction --------------------------------------------------
class SelfLoop : public Error {
public:
    explicit SelfLoop(const std::string& what) : Error(what) {}
};

class DuplicateEdge : public Error {
public:
    explicit DuplicateEdge(const std::string& what) : Error(what) {}
};

class VertexOutOfRange : public Error {
public:
    explicit VertexOutOfRange(const std::string& what) : Error(what) {}
};

class SameVertex : public Error {
public:
    explicit SameVertex(const std::string& what) : Error(what) {}
};

class MalformedGraph6 : public Error {
public:
    explicit MalformedGraph6(const std::string& what) : Error(what) {}
};

class EmptyGraph : public Error {
public:
    explicit EmptyGraph(const std::string& what) : Error(what) {}
};

// ---- formula domains -----------------------------------------------------
class OddQ : public Error {
public:
    explicit OddQ(const std::string& what) : Error(what) {}
};

class DegreeOutOfRange : public Error {
public:
    explicit DegreeOutOfRange(const std::string& what) : Error(what) {}
};

class RadicandNegative : public Error {
public:
    explicit RadicandNegative(const std::string& what) : Error(what) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// ---- size limits -----------------------------------------------------------
class TooLarge : public Error {
public:
    explicit TooLarge(const std::string& what) : Error(what) {}
};

// ---- search ----------------------------------------------------------------
// Thrown by operations whose result would be silently wrong if truncated
// (enumeration, class counting). The max-edge search itself never throws
// this: it returns its best-so-far with the optimality flag cleared.
class BudgetExhausted : public Error {
public:
    explicit BudgetExhausted(const std::string& what) : Error(what) {}
};

} // namespace quadfree

#endif
