// Writes the generated corpus files (everything except fix_a.hyp) into a directory.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "hyperprime/corpus_sources.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_corpus OUTDIR\n";
        return 2;
    }
    const std::filesystem::path out(argv[1]);
    std::filesystem::create_directories(out);
    for (const auto& [file, text] : hyperprime::generated_corpus_files()) {
        std::ofstream os(out / file);
        os << text;
        if (!os) {
            std::cerr << "cannot write " << (out / file).string() << '\n';
            return 1;
        }
    }
    return 0;
}
