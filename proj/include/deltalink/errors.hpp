#pragma once

#include <stdexcept>
#include <string>

namespace deltalink {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// diagram
class MalformedInput : public Error { public: using Error::Error; };
class NonPlanar : public Error { public: using Error::Error; };
class DanglingArc : public Error { public: using Error::Error; };
class EmptySelection : public Error { public: using Error::Error; };

// invariants
class WrongComponentCount : public Error { public: using Error::Error; };
class ResourceLimit : public Error { public: using Error::Error; };

// moves
class StaleSite : public Error { public: using Error::Error; };

// catalog
class ParseError : public Error { public: using Error::Error; };
class ValidationError : public Error { public: using Error::Error; };

// analysis
class NotSelfEquivalent : public Error { public: using Error::Error; };
class NotProper : public Error { public: using Error::Error; };
class UnknownComponentValue : public Error { public: using Error::Error; };
class UnknownValue : public Error { public: using Error::Error; };
class NotAlgebraicallySplit : public Error { public: using Error::Error; };
class NonzeroLinking : public Error { public: using Error::Error; };
class InconsistentEvidence : public Error { public: using Error::Error; };

} // namespace deltalink
