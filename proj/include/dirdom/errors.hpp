#pragma once

#include <stdexcept>
#include <string>

namespace dirdom {

// Input text that does not conform to the declared format.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Work refused because it would exceed a configured size cap.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was applied to an instance outside its hypotheses.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An extractor returned a part that breaks its declared size guarantee.
class ExtractorContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dirdom
