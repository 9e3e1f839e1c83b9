#pragma once

#include <string>
#include <vector>

#include "vkit/codec.hpp"

namespace vkit {

/// Deterministic diagram corpus: named knots as braid and plat closures,
/// their R1/R2/R3/conjugation variants, singular PD instances for pulling,
/// and a three-double-point diagram with one unexposed double point.
std::vector<CorpusRecord> generate_corpus();

std::string corpus_text(const std::vector<CorpusRecord>& records);

/// Directory holding corpus.txt and c2.config, fixed at build time.
std::string data_dir();

std::vector<CorpusRecord> load_corpus(const std::string& path);

}  // namespace vkit
