#include "divsudoku/corpus.hpp"

#include <stdexcept>

#include "divsudoku/io.hpp"

namespace divsudoku::corpus {

LatinSquare appendix(int index_1_based) {
    if (index_1_based < 1 || index_1_based > 186)
        throw std::out_of_range("appendix index must be 1..186");
    return square_from_digits(kAppendix[index_1_based - 1]);
}

LatinSquare named(const std::string& label) {
    if (label == "L0") return square_from_digits(kL0);
    if (label == "L17") return square_from_digits(kL17);
    if (label == "L175") return square_from_digits(kL175);
    if (label == "L179") return square_from_digits(kL179);
    if (label == "Q") return square_from_digits(kQMul);
    if (label == "Qrdiv") return square_from_digits(kQRdiv);
    if (label == "Qldiv") return square_from_digits(kQLdiv);
    if (label == "ex-iota") return square_from_digits(kExampleIota);
    if (label == "ex-mu") return square_from_digits(kExampleMu);
    throw std::out_of_range("unknown corpus label: " + label);
}

std::vector<std::string> named_labels() {
    return {"L0", "L17", "L175", "L179", "Q", "Qrdiv", "Qldiv", "ex-iota", "ex-mu"};
}

}  // namespace divsudoku::corpus
