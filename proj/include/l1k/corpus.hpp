#pragma once

// Formula corpora and the faithfulness round trip over them: for every
// formula, the ontology-side decision and the modal-side validity of its
// translation must agree. The scan is embarrassingly parallel; the OpenMP
// kernel and the serial reference implementation must produce identical
// reports, and the benchmark tool compares their wall time.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "l1k/syntax.hpp"

namespace l1k {

// The first `count` name variables a, b, c, ...; count <= 26.
std::vector<NameVar> default_name_vars(int count);

// Every {!,|} formula over all eps-atoms on `vars` with AST size up to
// `max_size`, ordered by size and then by construction order (negations of
// the previous layer first, then disjunctions by split point). Sizes grow
// quickly; (2 vars, size 7) is ~4.5k formulas, (2 vars, size 9) ~200k.
std::vector<L1Formula> enumerate_l1(const std::vector<NameVar>& vars,
                                    int max_size);

// `count` random formulas with AST size in [1, max_size]. The generator is
// a fixed linear scheme over std::mt19937_64, so a seed pins the corpus
// across platforms.
std::vector<L1Formula> sample_l1(const std::vector<NameVar>& vars, int max_size,
                                 std::uint64_t seed, int count);

// Random modal formulas of box-depth <= 1 over `var_count` variables.
std::vector<ModalFormula> sample_modal_depth1(int var_count, int max_size,
                                              std::uint64_t seed, int count);

// ---------------------------------------------------------------------------
// Round trip
// ---------------------------------------------------------------------------

struct Mismatch {
    std::size_t index;
    L1Formula formula;
    bool provable;      // ontology-side verdict
    bool translation_valid;  // modal-side verdict on the translation
};

struct RoundtripReport {
    std::size_t checked = 0;
    std::size_t provable = 0;
    std::vector<Mismatch> mismatches;  // sorted by index

    bool ok() const { return mismatches.empty(); }
};

RoundtripReport roundtrip_serial(const std::vector<L1Formula>& corpus);

// OpenMP kernel; identical output to roundtrip_serial. `threads` <= 0 uses
// the runtime default; without OpenMP support this falls back to the serial
// path.
RoundtripReport roundtrip_parallel(const std::vector<L1Formula>& corpus,
                                   int threads = 0);

}  // namespace l1k
