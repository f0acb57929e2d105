#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace posetkit {

enum class Errc {
  DuplicateLabel,
  UnknownLabel,
  EmptyCarrier,
  NotReflexive,
  NotAntisymmetric,
  NotTransitive,
  ElementNotInCarrier,
  EmptySubset,
  HostMismatch,
  SplitNotCovering,
  StitchFailure,
  CertificateMismatch,
  InstanceTooLarge,
  BadParams,
  InvariantBroken,
};

std::string_view to_string(Errc code);

/// A pair of element indices that localizes a failure. `via` is set for
/// transitivity failures: a <= via <= b holds but a <= b does not.
struct WitnessPair {
  std::size_t a = 0;
  std::size_t b = 0;
  std::optional<std::size_t> via;

  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, std::optional<WitnessPair> witness = std::nullopt)
      : std::runtime_error(std::move(message)), code_(code), witness_(witness) {}

  Errc code() const noexcept { return code_; }
  const std::optional<WitnessPair>& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::optional<WitnessPair> witness_;
};

}  // namespace posetkit
