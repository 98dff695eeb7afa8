#include "qbrst/ncring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qbrst {

GeneratorAlphabet::GeneratorAlphabet(std::vector<Family> f) : fams_(std::move(f)) {
    if (fams_.size() > 127) throw std::invalid_argument("too many families");
    std::set<std::string> names;
    for (auto& x : fams_) {
        if (!names.insert(x.name).second) throw std::invalid_argument("duplicate family " + x.name);
        if (x.size() > 256) throw std::invalid_argument("family too large: " + x.name);
        n_sectors_ = std::max(n_sectors_, x.sector + 1);
    }
}

int GeneratorAlphabet::find(const std::string& name) const {
    for (size_t i = 0; i < fams_.size(); ++i)
        if (fams_[i].name == name) return int(i);
    return -1;
}

int GeneratorAlphabet::grading(const Word& w) const {
    int g = 0;
    for (Letter l : w) g += fams_.at(fam_of(l)).grading;
    return g;
}

std::vector<Letter> GeneratorAlphabet::sector_letters(int s) const {
    std::vector<Letter> r;
    for (size_t f = 0; f < fams_.size(); ++f)
        if (fams_[f].sector == s)
            for (int i = 0; i < fams_[f].size(); ++i) r.push_back(make_letter(int(f), i));
    std::sort(r.begin(), r.end());
    return r;
}

std::string GeneratorAlphabet::letter_name(Letter l) const {
    const Family& f = fams_.at(fam_of(l));
    int i = idx_of(l);
    std::ostringstream os;
    os << f.name;
    if (f.matrix) os << '[' << i / f.cols + 1 << ',' << i % f.cols + 1 << ']';
    else os << '[' << i + 1 << ']';
    return os.str();
}

NCPoly NCPoly::word(Word w, const Scalar& c) {
    NCPoly p;
    if (!c.is_zero()) p.t_.emplace(std::move(w), c);
    return p;
}

void NCPoly::add(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

Scalar NCPoly::coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? Scalar() : it->second;
}

NCPoly NCPoly::operator-() const {
    NCPoly r = *this;
    for (auto& [w, c] : r.t_) c = -c;
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (auto& [w, c] : o.t_) add(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (auto& [w, c] : o.t_) add(w, -c);
    return *this;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    return r += o;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
    NCPoly r = *this;
    return r -= o;
}

NCPoly NCPoly::operator*(const Scalar& s) const {
    NCPoly r;
    if (s.is_zero()) return r;
    for (auto& [w, c] : t_) r.t_.emplace(w, c * s);
    return r;
}

NCPoly NCPoly::concat(const NCPoly& o) const {
    NCPoly r;
    for (auto& [w1, c1] : t_)
        for (auto& [w2, c2] : o.t_) r.add(w1 + w2, c1 * c2);
    return r;
}

std::optional<int> NCPoly::grading(const GeneratorAlphabet& a) const {
    std::optional<int> g;
    for (auto& [w, c] : t_) {
        int x = a.grading(w);
        if (g && *g != x) return std::nullopt;
        g = x;
    }
    return g ? g : 0;
}

size_t NCPoly::max_length() const {
    size_t m = 0;
    for (auto& [w, c] : t_) m = std::max(m, w.size());
    return m;
}

std::string NCPoly::str(const GeneratorAlphabet& a) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.str() << ')';
        for (Letter l : w) os << ' ' << a.letter_name(l);
    }
    return os.str();
}

std::map<std::pair<Letter, Letter>, ExchangeRule> derive_exchange(const GeneratorAlphabet& a, int hi, int lo,
                                                                const std::vector<NCPoly>& eqs) {
    const int nh = a.family(hi).size(), nl = a.family(lo).size();
    const int nu = nh * nl;
    // column ids: unknown hi.lo words first, then every other word in sorted order
    std::map<Word, int> other;
    for (auto& e : eqs)
        for (auto& [w, c] : e.terms()) {
            bool unknown = w.size() == 2 && fam_of(w[0]) == hi && fam_of(w[1]) == lo;
            if (unknown) continue;
            bool ok = w.size() < 2 || (w.size() == 2 && fam_of(w[0]) == lo && fam_of(w[1]) == hi);
            if (!ok) throw std::invalid_argument("derive_exchange: unexpected word in relation");
            other.emplace(w, 0);
        }
    std::vector<Word> col_word;
    int next = nu;
    for (auto& [w, id] : other) {
        id = next++;
        col_word.push_back(w);
    }
    std::vector<Row<Scalar>> rows;
    for (auto& e : eqs) {
        Row<Scalar> r;
        for (auto& [w, c] : e.terms()) {
            int col;
            if (w.size() == 2 && fam_of(w[0]) == hi && fam_of(w[1]) == lo) col = idx_of(w[0]) * nl + idx_of(w[1]);
            else col = other.at(w);
            r[col] += c;
        }
        rows.push_back(std::move(r));
    }
    auto ech = rref(std::move(rows));
    int covered = 0;
    for (int p : ech.pivots) {
        if (p >= nu) throw SingularSandwich("derive_exchange: relations constrain the ordered words");
        ++covered;
    }
    if (covered != nu) throw SingularSandwich("derive_exchange: sandwich is singular");
    std::map<std::pair<Letter, Letter>, ExchangeRule> out;
    for (size_t i = 0; i < ech.rows.size(); ++i) {
        int p = ech.pivots[i];
        Letter x = make_letter(hi, p / nl), y = make_letter(lo, p % nl);
        ExchangeRule rule;
        for (auto& [c, v] : ech.rows[i]) {
            if (c == p) continue;
            if (c < nu) throw std::logic_error("derive_exchange: not fully reduced");
            const Word& w = col_word[size_t(c - nu)];
            if (w.size() == 2) rule.swaps.push_back({{w[0], w[1]}, -v});
            else rule.tail.add(w, -v);
        }
        out.emplace(std::make_pair(x, y), std::move(rule));
    }
    return out;
}

RelationSet::RelationSet(GeneratorAlphabet a) : a_(std::move(a)), sect_(size_t(a_.n_sectors())) {
    for (int s = 0; s < a_.n_sectors(); ++s) sect_[size_t(s)].letters = a_.sector_letters(s);
}

void RelationSet::add_cross_relations(int hi, int lo, const std::vector<NCPoly>& eqs) {
    set_cross_rules(hi, lo, derive_exchange(a_, hi, lo, eqs));
}

void RelationSet::set_cross_rules(int hi, int lo, std::map<std::pair<Letter, Letter>, ExchangeRule> r) {
    if (a_.family(hi).sector <= a_.family(lo).sector) throw std::invalid_argument("cross rule: hi must follow lo");
    std::lock_guard<std::mutex> g(mu_);
    for (auto& [k, v] : r) exch_[uint32_t(k.first) << 16 | k.second] = std::move(v);
    cross_fams_.insert({hi, lo});
    move_memo_.clear();
    mul_memo_.clear();
}

void RelationSet::add_sector_relations(int s, const std::vector<NCPoly>& rels) {
    std::lock_guard<std::mutex> g(mu_);
    Sector& sc = sect_.at(size_t(s));
    for (auto& r : rels) {
        if (r.is_zero()) continue;
        for (auto& [w, c] : r.terms()) {
            if (w.size() > 2) throw std::invalid_argument("sector relations must have degree <= 2");
            if (w.size() != 2) sc.homogeneous = false;
            for (Letter l : w)
                if (a_.sector(l) != s) throw std::invalid_argument("sector relation uses a foreign letter");
        }
        sc.rels.push_back(r);
    }
    sc.level = -1;
    sc.standard.clear();
    sc.pivots.clear();
    sc.memo.clear();
    sc.stable = true;
    move_memo_.clear();
    mul_memo_.clear();
}

const ExchangeRule* RelationSet::cross_rule(Letter hi, Letter lo) const {
    auto it = exch_.find(uint32_t(hi) << 16 | lo);
    return it == exch_.end() ? nullptr : &it->second;
}

bool RelationSet::has_cross(int hi, int lo) const { return cross_fams_.count({hi, lo}) > 0; }

void RelationSet::ensure_level(int s, int d) {
    Sector& sc = sect_[size_t(s)];
    while (sc.level < d) build_level(s, sc.level + 1);
}

RelationSet::Terms RelationSet::image(int s, const Word& w) {
    if (w.empty()) return {{Word(), Scalar(1)}};
    Word pre = w.substr(0, w.size() - 1);
    Letter last = w.back();
    Terms r;
    for (auto& [u, c] : reduce(s, pre)) r.push_back({u + last, c});
    return r;
}

void RelationSet::build_level(int s, int D) {
    Sector& sc = sect_[size_t(s)];
    if (D == 0) {
        sc.standard.insert(Word());
        sc.level = 0;
        return;
    }
    const bool hom = sc.homogeneous;
    std::vector<Word> prev(sc.standard.begin(), sc.standard.end());
    std::vector<Word> cand;
    if (!hom) cand.push_back(Word());
    for (auto& u : prev) {
        if (hom && int(u.size()) != D - 1) continue;
        for (Letter x : sc.letters) cand.push_back(u + x);
    }
    // descending deg-lex: the first column of a row is its leading word
    std::sort(cand.begin(), cand.end(), [](const Word& a, const Word& b) { return deglex_less(b, a); });
    std::unordered_map<Word, int> col;
    for (size_t i = 0; i < cand.size(); ++i) col.emplace(cand[i], int(i));

    std::vector<Row<Scalar>> rows;
    for (auto& u : prev) {
        if (int(u.size()) > D - 2 || (hom && int(u.size()) != D - 2)) continue;
        for (auto& r : sc.rels) {
            Row<Scalar> row;
            for (auto& [w, c] : r.terms())
                for (auto& [v, cv] : image(s, u + w)) {
                    auto it = col.find(v);
                    if (it == col.end()) throw std::logic_error("sector reduction: word outside the candidate set");
                    row[it->second] += c * cv;
                }
            rows.push_back(std::move(row));
        }
    }
    auto ech = rref(std::move(rows));
    std::vector<bool> is_piv(cand.size(), false);
    for (int p : ech.pivots) is_piv[size_t(p)] = true;

    std::unordered_map<Word, Terms> piv;
    for (size_t i = 0; i < ech.rows.size(); ++i) {
        Terms t;
        int p = ech.pivots[i];
        for (auto& [c, v] : ech.rows[i])
            if (c != p) t.push_back({cand[size_t(c)], -v});
        piv.emplace(cand[size_t(p)], std::move(t));
    }
    if (hom) {
        for (size_t i = 0; i < cand.size(); ++i)
            if (!is_piv[i]) sc.standard.insert(cand[i]);
        for (auto& [w, t] : piv) sc.pivots[w] = std::move(t);
    } else {
        decltype(sc.standard) next(deglex_less);
        for (size_t i = 0; i < cand.size(); ++i)
            if (!is_piv[i]) next.insert(cand[i]);
        std::vector<Word> low;
        for (auto& w : next)
            if (int(w.size()) < D) low.push_back(w);
        if (low != prev) sc.stable = false;
        sc.standard = std::move(next);
        sc.pivots = std::move(piv);
    }
    sc.level = D;
}

const RelationSet::Terms& RelationSet::reduce(int s, const Word& w) {
    Sector& sc = sect_[size_t(s)];
    ensure_level(s, int(w.size()));
    auto m = sc.memo.find(w);
    if (m != sc.memo.end()) return m->second;
    Terms out;
    if (sc.standard.count(w)) {
        out.push_back({w, Scalar(1)});
    } else if (auto p = sc.pivots.find(w); p != sc.pivots.end()) {
        out = p->second;
    } else {
        std::map<Word, Scalar> acc;
        for (auto& [v, c] : image(s, w)) {
            if (sc.standard.count(v)) {
                acc[v] += c;
            } else {
                auto q = sc.pivots.find(v);
                if (q == sc.pivots.end()) throw std::logic_error("sector reduction: unreduced candidate");
                for (auto& [u, cu] : q->second) acc[u] += c * cu;
            }
        }
        for (auto& [v, c] : acc)
            if (!c.is_zero()) out.push_back({v, c});
    }
    return sc.memo.emplace(w, std::move(out)).first->second;
}

const RelationSet::Moved& RelationSet::move_left(const Word& g, Letter x) {
    Word key = g + x;
    auto m = move_memo_.find(key);
    if (m != move_memo_.end()) return m->second;
    Moved out;
    if (g.empty()) {
        out.swaps.push_back({{x, Word()}, Scalar(1)});
    } else {
        Letter y = g.back();
        Word rest = g.substr(0, g.size() - 1);
        const ExchangeRule* rule = cross_rule(y, x);
        if (!rule)
            throw std::logic_error("no exchange rule for " + a_.letter_name(y) + " " + a_.letter_name(x));
        std::map<std::pair<Letter, Word>, Scalar> sw;
        for (auto& [xy, c] : rule->swaps) {
            auto [x2, y2] = xy;
            const Moved& sub = move_left(rest, x2);
            for (auto& [xg, c3] : sub.swaps) sw[{xg.first, xg.second + y2}] += c * c3;
            for (auto& [r, cr] : sub.rest) {
                auto [it, fresh] = out.rest.emplace(r + y2, c * cr);
                if (!fresh) it->second += c * cr;
            }
        }
        for (auto& [t, ct] : rule->tail.terms()) {
            auto [it, fresh] = out.rest.emplace(rest + t, ct);
            if (!fresh) it->second += ct;
        }
        for (auto& [k, c] : sw)
            if (!c.is_zero()) out.swaps.push_back({k, c});
        for (auto it = out.rest.begin(); it != out.rest.end();) {
            if (it->second.is_zero()) it = out.rest.erase(it);
            else ++it;
        }
    }
    return move_memo_.emplace(std::move(key), std::move(out)).first->second;
}

namespace {

void acc_add(std::unordered_map<Word, Scalar>& acc, const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = acc.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

}

const RelationSet::Terms& RelationSet::mul_letter(const Word& w, Letter x) {
    Word key = w + x;
    auto m = mul_memo_.find(key);
    if (m != mul_memo_.end()) return m->second;
    const int F = a_.sector(x);
    Terms out;
    if (w.empty() || a_.sector(w.back()) <= F) {
        size_t cut = w.size();
        while (cut > 0 && a_.sector(w[cut - 1]) == F) --cut;
        Word u = w.substr(0, cut), b = w.substr(cut) + x;
        for (auto& [t, c] : reduce(F, b)) out.push_back({u + t, c});
    } else {
        const int G = a_.sector(w.back());
        size_t cut = w.size();
        while (cut > 0 && a_.sector(w[cut - 1]) == G) --cut;
        Word u = w.substr(0, cut), g = w.substr(cut);
        Acc acc;
        const Moved& mv = move_left(g, x);
        for (auto& [xg, c] : mv.swaps) {
            const Terms& rg = reduce(G, xg.second);
            if (rg.empty()) continue;
            const Terms& left = mul_letter(u, xg.first);
            for (auto& [v, cv] : left) {
                Scalar k = c * cv;
                for (auto& [h, ch] : rg) acc_add(acc, v + h, k * ch);
            }
        }
        for (auto& [r, c] : mv.rest) mul_word_into(acc, u, r, c);
        std::vector<std::pair<Word, Scalar>> v(acc.begin(), acc.end());
        std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
        out = std::move(v);
    }
    return mul_memo_.emplace(std::move(key), std::move(out)).first->second;
}

void RelationSet::mul_word_into(Acc& out, const Word& w, const Word& r, const Scalar& c) {
    Acc cur;
    cur.emplace(w, Scalar(1));
    for (Letter x : r) {
        Acc nxt;
        for (auto& [u, cu] : cur)
            for (auto& [v, cv] : mul_letter(u, x)) acc_add(nxt, v, cu * cv);
        cur = std::move(nxt);
    }
    for (auto& [u, cu] : cur) acc_add(out, u, c * cu);
}

NCPoly RelationSet::normal_form_unlocked(const NCPoly& p) {
    Acc acc;
    for (auto& [w, c] : p.terms()) mul_word_into(acc, Word(), w, c);
    NCPoly r;
    for (auto& [w, c] : acc) r.add(w, c);
    return r;
}

NCPoly RelationSet::mul_unlocked(const NCPoly& a, const NCPoly& b) {
    NCPoly na = normal_form_unlocked(a);
    Acc out;
    // words of b in sorted order share prefixes; stack[k] = a * w[0..k)
    std::vector<Acc> stack;
    stack.emplace_back(na.terms().begin(), na.terms().end());
    Word prev;
    for (auto& [w, c] : b.terms()) {
        size_t common = 0;
        while (common < prev.size() && common < w.size() && prev[common] == w[common]) ++common;
        stack.resize(common + 1);
        for (size_t k = common; k < w.size(); ++k) {
            Acc nxt;
            for (auto& [u, cu] : stack[k])
                for (auto& [v, cv] : mul_letter(u, w[k])) acc_add(nxt, v, cu * cv);
            stack.push_back(std::move(nxt));
        }
        for (auto& [u, cu] : stack[w.size()]) acc_add(out, u, c * cu);
        prev = w;
    }
    NCPoly r;
    for (auto& [w, c] : out) r.add(w, c);
    return r;
}

NCPoly RelationSet::normal_form(const NCPoly& p) {
    std::lock_guard<std::mutex> g(mu_);
    return normal_form_unlocked(p);
}

NCPoly RelationSet::mul(const NCPoly& a, const NCPoly& b) {
    std::lock_guard<std::mutex> g(mu_);
    return mul_unlocked(a, b);
}

bool RelationSet::is_normal_word(const Word& w) {
    std::lock_guard<std::mutex> g(mu_);
    size_t i = 0;
    int last = -1;
    while (i < w.size()) {
        int s = a_.sector(w[i]);
        if (s <= last) return false;
        size_t j = i;
        while (j < w.size() && a_.sector(w[j]) == s) ++j;
        Word b = w.substr(i, j - i);
        ensure_level(s, int(b.size()));
        if (!sect_[size_t(s)].standard.count(b)) return false;
        last = s;
        i = j;
    }
    return true;
}

std::vector<Word> RelationSet::standard_words(int s, int d) {
    std::lock_guard<std::mutex> g(mu_);
    ensure_level(s, d);
    std::vector<Word> r;
    for (auto& w : sect_.at(size_t(s)).standard)
        if (int(w.size()) == d) r.push_back(w);
    return r;
}

SectorStats RelationSet::sector_stats(int s) {
    std::lock_guard<std::mutex> g(mu_);
    const Sector& sc = sect_.at(size_t(s));
    SectorStats st;
    st.level = sc.level;
    st.stable = sc.stable;
    st.dims.assign(size_t(std::max(sc.level + 1, 0)), 0);
    for (auto& w : sc.standard) ++st.dims[w.size()];
    return st;
}

NCMatrix NCMatrix::identity(int n, const Scalar& s) {
    NCMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = NCPoly(s);
    return m;
}

NCMatrix NCMatrix::scalar(const SMat& a) {
    NCMatrix m(int(a.rows()), int(a.cols()));
    for (int i = 0; i < m.r_; ++i)
        for (int j = 0; j < m.c_; ++j) m(i, j) = NCPoly(a(i, j));
    return m;
}

NCMatrix NCMatrix::generator(const GeneratorAlphabet& al, int fam) {
    const Family& f = al.family(fam);
    NCMatrix m(f.rows, f.cols);
    for (int a = 0; a < f.rows; ++a)
        for (int b = 0; b < f.cols; ++b) m(a, b) = NCPoly::letter(al.letter(fam, a, b));
    return m;
}

NCMatrix NCMatrix::operator+(const NCMatrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("NCMatrix: shape mismatch");
    NCMatrix m = *this;
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    return m;
}

NCMatrix NCMatrix::operator-(const NCMatrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("NCMatrix: shape mismatch");
    NCMatrix m = *this;
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
    return m;
}

NCMatrix NCMatrix::operator*(const Scalar& s) const {
    NCMatrix m = *this;
    for (auto& x : m.e_) x = x * s;
    return m;
}

NCMatrix NCMatrix::concat(const NCMatrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("NCMatrix: shape mismatch");
    NCMatrix m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            const NCPoly& a = (*this)(i, j);
            if (a.is_zero()) continue;
            for (int k = 0; k < o.c_; ++k)
                if (!o(j, k).is_zero()) m(i, k) += a.concat(o(j, k));
        }
    return m;
}

NCMatrix NCMatrix::mul(const NCMatrix& o, RelationSet& rs) const {
    if (c_ != o.r_) throw std::invalid_argument("NCMatrix: shape mismatch");
    NCMatrix m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            const NCPoly& a = (*this)(i, j);
            if (a.is_zero()) continue;
            for (int k = 0; k < o.c_; ++k)
                if (!o(j, k).is_zero()) m(i, k) += rs.mul(a, o(j, k));
        }
    return m;
}

NCMatrix NCMatrix::normal_form(RelationSet& rs) const {
    NCMatrix m = *this;
    for (auto& x : m.e_) x = rs.normal_form(x);
    return m;
}

NCMatrix NCMatrix::in2(int N) const {
    NCMatrix m(N * r_, N * c_);
    for (int i = 0; i < N; ++i)
        for (int a = 0; a < r_; ++a)
            for (int b = 0; b < c_; ++b) m(i * r_ + a, i * c_ + b) = (*this)(a, b);
    return m;
}

NCMatrix NCMatrix::in1(int N) const {
    NCMatrix m(N * r_, N * c_);
    for (int a = 0; a < r_; ++a)
        for (int b = 0; b < c_; ++b)
            for (int i = 0; i < N; ++i) m(a * N + i, b * N + i) = (*this)(a, b);
    return m;
}

bool NCMatrix::is_zero() const {
    for (auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

size_t NCMatrix::term_count() const {
    size_t n = 0;
    for (auto& x : e_) n += x.size();
    return n;
}

}
