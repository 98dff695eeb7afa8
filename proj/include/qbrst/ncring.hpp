#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qbrst/linalg.hpp"
#include "qbrst/qfield.hpp"

namespace qbrst {

// A letter packs (family, index); matrix families use index a*N+b for the entry (a,b).
using Letter = char16_t;
using Word = std::u16string;

inline Letter make_letter(int fam, int idx) { return Letter((fam << 8) | idx); }
inline int fam_of(Letter l) { return int(l) >> 8; }
inline int idx_of(Letter l) { return int(l) & 0xff; }

struct Family {
    std::string name;
    int grading = 0;
    int sector = 0;  // position in the normal order; families may share a sector
    int rows = 1;    // matrix families: rows = cols = N
    int cols = 1;    // abstract families: rows = range, cols = 1
    bool matrix = true;
    int size() const { return rows * cols; }
};

class GeneratorAlphabet {
public:
    GeneratorAlphabet() = default;
    explicit GeneratorAlphabet(std::vector<Family> f);
    const std::vector<Family>& families() const { return fams_; }
    const Family& family(int f) const { return fams_.at(f); }
    int find(const std::string& name) const;  // -1 if absent
    int n_sectors() const { return n_sectors_; }
    int sector(Letter l) const { return fams_[fam_of(l)].sector; }
    int grading(const Word& w) const;
    std::vector<Letter> sector_letters(int s) const;
    Letter letter(int fam, int a, int b = 0) const { return make_letter(fam, a * fams_.at(fam).cols + b); }
    std::string letter_name(Letter l) const;

private:
    std::vector<Family> fams_;
    int n_sectors_ = 0;
};

// Degree first, then lexicographic on letter codes.
inline bool deglex_less(const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

class NCPoly {
public:
    using Map = std::map<Word, Scalar>;
    NCPoly() = default;
    NCPoly(const Scalar& c) { if (!c.is_zero()) t_.emplace(Word(), c); }
    static NCPoly word(Word w, const Scalar& c = 1);
    static NCPoly letter(Letter l) { return word(Word(1, l)); }

    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    void add(const Word& w, const Scalar& c);
    Scalar coeff(const Word& w) const;

    NCPoly operator-() const;
    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly operator*(const Scalar& s) const;
    bool operator==(const NCPoly& o) const { return t_ == o.t_; }
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

    // product in the free algebra (concatenation)
    NCPoly concat(const NCPoly& o) const;
    // all terms share one grading
    std::optional<int> grading(const GeneratorAlphabet& a) const;
    size_t max_length() const;
    std::string str(const GeneratorAlphabet& a) const;

private:
    Map t_;
};

// hi_a lo_b = sum c lo_b' hi_a' + tail
struct ExchangeRule {
    std::vector<std::pair<std::pair<Letter, Letter>, Scalar>> swaps;
    NCPoly tail;
};

struct SingularSandwich : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Solves the equations eqs (each an element that vanishes) for the words hi.lo.
// Every other word occurring must be lo.hi or shorter. Throws SingularSandwich if the
// hi.lo block is not invertible.
std::map<std::pair<Letter, Letter>, ExchangeRule> derive_exchange(const GeneratorAlphabet& a, int hi, int lo,
                                                                const std::vector<NCPoly>& eqs);

struct SectorStats {
    int level = 0;
    std::vector<int> dims;  // number of standard words of each length
    bool stable = true;     // lower standard sets never changed when extending
};

// Normal ordering by exchange rules between sectors plus per-degree linear reduction
// inside each sector. Caches are internal; public calls are serialized.
class RelationSet {
public:
    explicit RelationSet(GeneratorAlphabet a);
    RelationSet(const RelationSet&) = delete;
    RelationSet& operator=(const RelationSet&) = delete;

    const GeneratorAlphabet& alphabet() const { return a_; }

    // hi must sit in a later sector than lo
    void add_cross_relations(int hi, int lo, const std::vector<NCPoly>& eqs);
    void set_cross_rules(int hi, int lo, std::map<std::pair<Letter, Letter>, ExchangeRule> r);
    void add_sector_relations(int sector, const std::vector<NCPoly>& rels);

    const std::vector<NCPoly>& sector_relations(int s) const { return sect_.at(s).rels; }
    const ExchangeRule* cross_rule(Letter hi, Letter lo) const;
    bool has_cross(int hi_fam, int lo_fam) const;

    NCPoly normal_form(const NCPoly& p);
    NCPoly mul(const NCPoly& a, const NCPoly& b);  // arguments need not be normal
    bool is_zero(const NCPoly& p) { return normal_form(p).is_zero(); }
    bool is_normal_word(const Word& w);

    // standard words of a sector with length exactly d
    std::vector<Word> standard_words(int sector, int d);
    SectorStats sector_stats(int sector);

    size_t cache_size() const { return mul_memo_.size() + move_memo_.size(); }

private:
    struct Sector {
        std::vector<Letter> letters;
        std::vector<NCPoly> rels;
        bool homogeneous = true;
        int level = -1;
        std::set<Word, bool (*)(const Word&, const Word&)> standard{deglex_less};
        std::unordered_map<Word, std::vector<std::pair<Word, Scalar>>> pivots;
        std::unordered_map<Word, std::vector<std::pair<Word, Scalar>>> memo;
        bool stable = true;
    };
    using Terms = std::vector<std::pair<Word, Scalar>>;
    using Acc = std::unordered_map<Word, Scalar>;
    struct Moved {
        std::vector<std::pair<std::pair<Letter, Word>, Scalar>> swaps;  // (x', g') with coefficient
        Acc rest;  // general words still to be multiplied in
    };

    void ensure_level(int s, int d);
    void build_level(int s, int d);
    const Terms& reduce(int s, const Word& w);
    Terms image(int s, const Word& w);
    const Moved& move_left(const Word& g, Letter x);
    const Terms& mul_letter(const Word& w, Letter x);
    void mul_word_into(Acc& out, const Word& w, const Word& r, const Scalar& c);
    NCPoly normal_form_unlocked(const NCPoly& p);
    NCPoly mul_unlocked(const NCPoly& a, const NCPoly& b);

    GeneratorAlphabet a_;
    std::vector<Sector> sect_;
    std::unordered_map<uint32_t, ExchangeRule> exch_;  // key hi<<16 | lo
    std::set<std::pair<int, int>> cross_fams_;
    std::unordered_map<Word, Moved> move_memo_;
    std::unordered_map<Word, Terms> mul_memo_;
    std::mutex mu_;
};

// Matrices with NCPoly entries (relations and matrix identities).
class NCMatrix {
public:
    NCMatrix() = default;
    NCMatrix(int r, int c) : r_(r), c_(c), e_(size_t(r) * c) {}
    static NCMatrix identity(int n, const Scalar& s = 1);
    static NCMatrix scalar(const SMat& m);
    // entry (a,b) = letter of fam at (a,b)
    static NCMatrix generator(const GeneratorAlphabet& al, int fam);
    int rows() const { return r_; }
    int cols() const { return c_; }
    NCPoly& operator()(int i, int j) { return e_[size_t(i) * c_ + j]; }
    const NCPoly& operator()(int i, int j) const { return e_[size_t(i) * c_ + j]; }

    NCMatrix operator+(const NCMatrix& o) const;
    NCMatrix operator-(const NCMatrix& o) const;
    NCMatrix operator*(const Scalar& s) const;
    NCMatrix concat(const NCMatrix& o) const;              // free product
    NCMatrix mul(const NCMatrix& o, RelationSet& rs) const;  // product in the algebra
    NCMatrix normal_form(RelationSet& rs) const;
    NCMatrix in2(int N) const;  // 1 (x) X
    NCMatrix in1(int N) const;  // X (x) 1
    bool is_zero() const;
    size_t term_count() const;
    std::vector<NCPoly> entries() const { return e_; }

private:
    int r_ = 0, c_ = 0;
    std::vector<NCPoly> e_;
};

}
