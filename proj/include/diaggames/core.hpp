// core.hpp -- domain types shared by every part of the diagonalization game:
// game parameters, queries, the partially revealed matrix, binary vectors and
// transcripts.
//
// Rows and columns are 0-based in memory. Transcripts and everything printed
// for a human use 1-based indices.

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace diaggames {

/// Hard upper bound on the vector length.
inline constexpr int kMaxColumns = 30;

/// Bound for code that enumerates all of {0,1}^n.
inline constexpr int kMaxEnumerableColumns = 20;

/// Raised for malformed inputs: bad dimensions, out-of-range indices, calls in
/// the wrong regime.
class GameError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive search would exceed its enumeration budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Regime { small, mid, large };

const char* to_string(Regime r);

/// Row count m and vector length n of one game.
class GameParams {
public:
    GameParams(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    Regime regime() const { return regime_; }
    std::uint64_t cube_size() const { return std::uint64_t{1} << n_; }

    /// Throws unless n is small enough to enumerate {0,1}^n.
    void require_enumerable(int cap = kMaxEnumerableColumns) const;

    friend bool operator==(const GameParams&, const GameParams&) = default;

private:
    int m_;
    int n_;
    Regime regime_;
};

struct Query {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Query&, const Query&) = default;
};

enum class Cell : std::uint8_t { zero = 0, one = 1, unknown = 2 };

/// A length-n binary vector packed into an integer. Column 0 is the most
/// significant bit, so integer order is lexicographic order.
class BinaryVector {
public:
    BinaryVector(std::uint32_t code, int n);

    static BinaryVector from_bits(std::span<const int> bits);
    static BinaryVector from_string(const std::string& s);

    std::uint32_t code() const { return code_; }
    int size() const { return n_; }
    int bit(int col) const { return static_cast<int>((code_ >> (n_ - 1 - col)) & 1U); }
    std::vector<int> bits() const;
    std::string to_string() const;

    friend auto operator<=>(const BinaryVector&, const BinaryVector&) = default;

private:
    std::uint32_t code_;
    int n_;
};

/// Bit mask of the given column in the packed encoding.
inline std::uint32_t column_mask(int col, int n) {
    return std::uint32_t{1} << (n - 1 - col);
}

/// What Cantor knows about Kronecker's matrix. Cells only move from unknown to
/// a bit, never back and never between bits.
class PartialMatrix {
public:
    explicit PartialMatrix(GameParams params);

    const GameParams& params() const { return params_; }
    int rows() const { return params_.m(); }
    int cols() const { return params_.n(); }

    Cell at(int row, int col) const;
    Cell at(Query q) const { return at(q.row, q.col); }

    /// Reveals one cell. Throws GameError on overwrite or out-of-range.
    void set(Query q, int bit);

    /// Packed known-column mask and known values of one row.
    std::uint32_t known_mask(int row) const { return known_[static_cast<std::size_t>(row)]; }
    std::uint32_t known_bits(int row) const { return bits_[static_cast<std::size_t>(row)]; }

    std::vector<int> queried_columns(int row) const;
    int queried_count(int row) const;
    std::uint64_t total_queried() const;
    bool row_fixed(int row) const;

    /// True iff every known cell of the row agrees with v.
    bool row_compatible(int row, std::uint32_t v) const {
        return ((v ^ bits_[static_cast<std::size_t>(row)]) & known_[static_cast<std::size_t>(row)]) == 0;
    }
    bool row_compatible(int row, const BinaryVector& v) const { return row_compatible(row, v.code()); }

    /// True iff some known cell of the row differs from v, i.e. v cannot be
    /// that row in any completion.
    bool row_excludes(int row, std::uint32_t v) const { return !row_compatible(row, v); }

    void check_query(Query q) const;

    std::string to_string() const;

    friend bool operator==(const PartialMatrix&, const PartialMatrix&) = default;

private:
    GameParams params_;
    std::uint32_t full_mask_;
    std::vector<std::uint32_t> known_;
    std::vector<std::uint32_t> bits_;
};

PartialMatrix new_partial_matrix(const GameParams& params);

/// Copying variant of PartialMatrix::set.
PartialMatrix set_cell(PartialMatrix L, Query q, int bit);

bool row_compatible(const PartialMatrix& L, int row, const BinaryVector& v);

/// FIXED(L): the distinct fully-queried rows, in increasing order.
std::set<std::uint32_t> fixed_rows(const PartialMatrix& L);

/// True iff the fully-queried rows realize all of {0,1}^n.
bool is_complete(const PartialMatrix& L);

/// Cantor's answer in the search game: a vector claimed to differ from every row.
struct SearchClaim {
    BinaryVector u;
    friend bool operator==(const SearchClaim&, const SearchClaim&) = default;
};

/// Cantor's answer in the decision game (m >= 2^n): either "all of {0,1}^n is
/// present", or a witness vector claimed to be missing.
struct DecisionClaim {
    bool complete = false;
    std::optional<BinaryVector> witness;
    friend bool operator==(const DecisionClaim&, const DecisionClaim&) = default;
};

using Claim = std::variant<SearchClaim, DecisionClaim>;

struct Event {
    Query query;
    int answer = 0;
    friend bool operator==(const Event&, const Event&) = default;
};

/// Full record of a single game.
struct Transcript {
    GameParams params;
    std::vector<Event> events;
    std::optional<Claim> claim;
    std::optional<std::uint64_t> seed;

    explicit Transcript(GameParams p) : params(p) {}

    /// Replays the events. Throws GameError on duplicates or out-of-range
    /// queries.
    PartialMatrix replay() const;

    /// Throws GameError when an invariant fails (duplicates, too many events,
    /// claim kind not matching the regime).
    void validate() const;

    friend bool operator==(const Transcript&, const Transcript&) = default;
};

/// JSON text of {m, n, events:[{i,j,b}], claim, seed?}; indices 1-based.
std::string to_json(const Transcript& t, int indent = 2);
Transcript transcript_from_json(const std::string& text);

}  // namespace diaggames
