#include "motifdfa/alphabet.hpp"

#include <stdexcept>

namespace motifdfa {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    rank_.fill(-1);
    if (symbols_.empty()) {
        throw std::invalid_argument("alphabet must not be empty");
    }
    if (symbols_.size() > max_size) {
        throw std::invalid_argument("alphabet has " + std::to_string(symbols_.size()) +
                                    " symbols; at most 64 are supported");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const auto c = static_cast<unsigned char>(symbols_[i]);
        if (c <= 0x20 || c >= 0x7f) {
            throw std::invalid_argument("alphabet symbol at index " + std::to_string(i) +
                                        " is not a printable non-space ASCII character");
        }
        if (rank_[c] >= 0) {
            throw std::invalid_argument(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
        }
        rank_[c] = static_cast<std::int8_t>(i);
    }
}

Alphabet Alphabet::dna() { return Alphabet{"ACGT"}; }

SymbolSet Alphabet::all() const {
    return size() == 64 ? SymbolSet{~std::uint64_t{0}} : SymbolSet{(std::uint64_t{1} << size()) - 1};
}

std::string Alphabet::spell(SymbolSet set) const {
    std::string out;
    set.for_each([&](std::size_t r) {
        if (r < size()) {
            out.push_back(symbols_[r]);
        }
    });
    return out;
}

}  // namespace motifdfa
