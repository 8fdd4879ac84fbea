// Line-oriented proof files.
//
//   # comment
//   theorem <name>                      or   from <formula>; <formula>; ...
//   1: <formula> by <justification>
//   2: ...
//
// Justifications: taut, truth, negintro, dist, selfR, selfD, introaware,
// unfalseR, unfalseD, disj, genaware, hyp <i>, mp <i> <j>, nec <i>,
// monoD <i>, monoR <i>, cite <name> [<Meta>=<formula>, ...].
// Line labels run 1, 2, 3, ...; hypotheses are numbered from 1 as well.

#ifndef AWAREKIT_PROOF_IO_HPP_
#define AWAREKIT_PROOF_IO_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "awarekit/proof.hpp"

namespace awarekit {

class ProofFileError : public std::runtime_error {
 public:
  ProofFileError(std::size_t file_line, const std::string& message);
  std::size_t file_line() const { return file_line_; }  // 1-based

 private:
  std::size_t file_line_;
};

ProofScript parse_proof(std::string_view text);
ProofScript load_proof_file(const std::string& path);
std::string render_proof(const ProofScript& script);

}  // namespace awarekit

#endif  // AWAREKIT_PROOF_IO_HPP_
