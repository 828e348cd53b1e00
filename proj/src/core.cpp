#include "diaggames/core.hpp"

#include <bit>
#include <sstream>

namespace diaggames {

const char* to_string(Regime r) {
    switch (r) {
    case Regime::small: return "small";
    case Regime::mid: return "mid";
    case Regime::large: return "large";
    }
    return "?";
}

GameParams::GameParams(int m, int n) : m_(m), n_(n), regime_(Regime::small) {
    if (m < 1 || n < 1) {
        throw GameError("game dimensions must be positive (m=" + std::to_string(m) +
                        ", n=" + std::to_string(n) + ")");
    }
    if (n > kMaxColumns) {
        throw GameError("n=" + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(kMaxColumns));
    }
    if (m <= n) {
        regime_ = Regime::small;
    } else if (static_cast<std::uint64_t>(m) < cube_size()) {
        regime_ = Regime::mid;
    } else {
        regime_ = Regime::large;
    }
}

void GameParams::require_enumerable(int cap) const {
    if (n_ > cap) {
        throw GameError("n=" + std::to_string(n_) + " is over the enumeration cap of " +
                        std::to_string(cap));
    }
}

BinaryVector::BinaryVector(std::uint32_t code, int n) : code_(code), n_(n) {
    if (n < 1 || n > kMaxColumns) throw GameError("binary vector length out of range");
    if (n < 32 && (code >> n) != 0) throw GameError("binary vector code does not fit in n bits");
}

BinaryVector BinaryVector::from_bits(std::span<const int> bits) {
    std::uint32_t code = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) throw GameError("bit values must be 0 or 1");
        code = (code << 1) | static_cast<std::uint32_t>(b);
    }
    return BinaryVector(code, static_cast<int>(bits.size()));
}

BinaryVector BinaryVector::from_string(const std::string& s) {
    std::vector<int> bits;
    for (char c : s) {
        if (c == '0' || c == '1') {
            bits.push_back(c - '0');
        } else {
            throw GameError("not a binary string: '" + s + "'");
        }
    }
    return from_bits(bits);
}

std::vector<int> BinaryVector::bits() const {
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(j)] = bit(j);
    return out;
}

std::string BinaryVector::to_string() const {
    std::string s;
    for (int j = 0; j < n_; ++j) s.push_back(bit(j) ? '1' : '0');
    return s;
}

PartialMatrix::PartialMatrix(GameParams params)
    : params_(params),
      full_mask_(params.n() == 32 ? ~0U : ((std::uint32_t{1} << params.n()) - 1)),
      known_(static_cast<std::size_t>(params.m()), 0),
      bits_(static_cast<std::size_t>(params.m()), 0) {}

void PartialMatrix::check_query(Query q) const {
    if (q.row < 0 || q.row >= rows() || q.col < 0 || q.col >= cols()) {
        throw GameError("query (" + std::to_string(q.row + 1) + "," + std::to_string(q.col + 1) +
                        ") is out of range for a " + std::to_string(rows()) + "x" +
                        std::to_string(cols()) + " matrix");
    }
}

Cell PartialMatrix::at(int row, int col) const {
    check_query({row, col});
    const std::uint32_t mask = column_mask(col, cols());
    if ((known_[static_cast<std::size_t>(row)] & mask) == 0) return Cell::unknown;
    return (bits_[static_cast<std::size_t>(row)] & mask) ? Cell::one : Cell::zero;
}

void PartialMatrix::set(Query q, int bit) {
    check_query(q);
    if (bit != 0 && bit != 1) throw GameError("answer must be 0 or 1");
    const std::uint32_t mask = column_mask(q.col, cols());
    auto& known = known_[static_cast<std::size_t>(q.row)];
    if (known & mask) {
        throw GameError("cell (" + std::to_string(q.row + 1) + "," + std::to_string(q.col + 1) +
                        ") is already known");
    }
    known |= mask;
    if (bit) bits_[static_cast<std::size_t>(q.row)] |= mask;
}

std::vector<int> PartialMatrix::queried_columns(int row) const {
    std::vector<int> out;
    for (int j = 0; j < cols(); ++j) {
        if (known_mask(row) & column_mask(j, cols())) out.push_back(j);
    }
    return out;
}

int PartialMatrix::queried_count(int row) const { return std::popcount(known_mask(row)); }

std::uint64_t PartialMatrix::total_queried() const {
    std::uint64_t total = 0;
    for (auto k : known_) total += static_cast<std::uint64_t>(std::popcount(k));
    return total;
}

bool PartialMatrix::row_fixed(int row) const { return known_mask(row) == full_mask_; }

std::string PartialMatrix::to_string() const {
    std::string s;
    for (int i = 0; i < rows(); ++i) {
        for (int j = 0; j < cols(); ++j) {
            switch (at(i, j)) {
            case Cell::zero: s.push_back('0'); break;
            case Cell::one: s.push_back('1'); break;
            case Cell::unknown: s.push_back('*'); break;
            }
        }
        s.push_back('\n');
    }
    return s;
}

PartialMatrix new_partial_matrix(const GameParams& params) { return PartialMatrix(params); }

PartialMatrix set_cell(PartialMatrix L, Query q, int bit) {
    L.set(q, bit);
    return L;
}

bool row_compatible(const PartialMatrix& L, int row, const BinaryVector& v) {
    if (v.size() != L.cols()) throw GameError("vector length does not match the matrix");
    return L.row_compatible(row, v);
}

std::set<std::uint32_t> fixed_rows(const PartialMatrix& L) {
    std::set<std::uint32_t> out;
    for (int i = 0; i < L.rows(); ++i) {
        if (L.row_fixed(i)) out.insert(L.known_bits(i));
    }
    return out;
}

bool is_complete(const PartialMatrix& L) {
    return fixed_rows(L).size() == L.params().cube_size();
}

PartialMatrix Transcript::replay() const {
    PartialMatrix L(params);
    for (const auto& e : events) L.set(e.query, e.answer);
    return L;
}

void Transcript::validate() const {
    const auto cap = static_cast<std::uint64_t>(params.m()) * static_cast<std::uint64_t>(params.n());
    if (events.size() > cap) throw GameError("transcript has more events than cells");
    (void)replay();
    if (!claim) return;
    const bool search = std::holds_alternative<SearchClaim>(*claim);
    if (search && params.regime() == Regime::large) {
        throw GameError("search claim in the m >= 2^n regime");
    }
    if (!search && params.regime() != Regime::large) {
        throw GameError("decision claim outside the m >= 2^n regime");
    }
    const int n = params.n();
    if (search && std::get<SearchClaim>(*claim).u.size() != n) {
        throw GameError("claimed vector has the wrong length");
    }
    if (!search) {
        const auto& d = std::get<DecisionClaim>(*claim);
        if (d.witness && d.witness->size() != n) throw GameError("witness has the wrong length");
    }
}

}  // namespace diaggames
