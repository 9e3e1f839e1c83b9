// Regenerates data/corpus.txt and data/c2.config.
#include <iostream>

#include "vkit/codec.hpp"
#include "vkit/corpus.hpp"
#include "vkit/oracles.hpp"

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : vkit::data_dir();
  try {
    const auto corpus = vkit::generate_corpus();
    vkit::write_document(dir + "/corpus.txt", {vkit::Format::Corpus, vkit::corpus_text(corpus)});
    const auto report = vkit::select_configuration(corpus);
    vkit::write_document(dir + "/c2.config", {vkit::Format::Table, vkit::format_configuration(report.chosen)});
    std::cout << corpus.size() << " records, " << report.survivors.size() << " surviving configurations, chose "
              << report.chosen.name() << "\n";
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
