#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "egyptian/problem.hpp"

namespace egyptian {

/// Line-oriented result record:
///   record egyptian/1
///   command <echo>
///   <key> <value>
///   ...
///   end
/// Field order is insertion order and must be kept stable per command, so a
/// rerun diffs clean against a golden file. Nothing time- or host-dependent
/// belongs in here.
class ResultRecord {
  public:
    explicit ResultRecord(std::string_view command);

    void field(std::string_view key, std::string_view value);
    std::string render() const;

  private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

std::string format_term(const Term& t);                              // (a b)
std::string format_representation(const Representation& r);          // (a b) (a b)
std::string format_signed_term(const SignedTerm& t);                 // (a b +)
std::string format_signed_representation(const SignedRepresentation& r);

}  // namespace egyptian
