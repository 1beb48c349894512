#pragma once

#include <vector>

#include "rllsidc/bitseq.hpp"
#include "rllsidc/sidc_core.hpp"

namespace rllsidc {

// Every distinct codeword that explains `received` with at most one edit:
// the word itself (length n), one reinsertion (length n-1) or one deletion
// (length n+1). Sorted lexicographically. Any other length is a DataError.
std::vector<BitSeq> candidate_codewords(const CodeParams& cp, const BitSeq& received);

// The unique codeword within one insertion/deletion of `received`.
// UncorrectableError when there is none; InvariantError if two distinct
// codewords qualify.
BitSeq correct(const CodeParams& cp, const BitSeq& received);

// correct, strip the m parity symbols, invert the front-end.
BitSeq decode_message(const CodeParams& cp, const BitSeq& received);

}  // namespace rllsidc
