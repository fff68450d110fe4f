#include "braidtk/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "braidtk/linking_graph.hpp"

namespace braidtk {

BraidWord::BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
    if (strands < 1) throw PreconditionError("strand count must be >= 1");
    for (int l : letters) {
        if (l < 1 || l > strands - 1)
            throw PreconditionError("letter index " + std::to_string(l) +
                                    " out of range [1," + std::to_string(strands - 1) + "]");
    }
}

std::string BraidWord::text() const {
    std::ostringstream os;
    os << "N=" << strands << ";";
    for (std::size_t i = 0; i < letters.size(); ++i) os << " s" << letters[i];
    return os.str();
}

BraidWord parse_braid(const std::string& text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto read_int = [&](const char* what) {
        skip_ws();
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw ParseError(std::string("expected ") + what, start);
        long v = std::stol(text.substr(start, i - start));
        return static_cast<int>(v);
    };

    std::optional<int> declared;
    skip_ws();
    if (i + 1 < n && text[i] == 'N' && text[i + 1] == '=') {
        i += 2;
        declared = read_int("strand count after N=");
        skip_ws();
        if (i >= n || text[i] != ';') throw ParseError("expected ';' after strand count", i);
        ++i;
    }

    std::vector<int> letters;
    int max_letter = 0;
    while (true) {
        skip_ws();
        if (i >= n) break;
        if (text[i] != 's') throw ParseError("expected term starting with 's'", i);
        ++i;
        std::size_t at = i;
        int idx = read_int("generator index");
        if (idx < 1) throw ParseError("generator index must be >= 1", at);
        int exp = 1;
        skip_ws();
        if (i < n && text[i] == '^') {
            ++i;
            std::size_t eat = i;
            exp = read_int("exponent");
            if (exp < 1) throw ParseError("exponent must be >= 1", eat);
        }
        max_letter = std::max(max_letter, idx);
        for (int k = 0; k < exp; ++k) letters.push_back(idx);
    }
    if (letters.empty()) throw ParseError("empty braid word", i);

    int strands = declared ? *declared : max_letter + 1;
    if (max_letter > strands - 1)
        throw ParseError("letter s" + std::to_string(max_letter) + " out of range for N=" +
                             std::to_string(strands),
                         0);
    return BraidWord(strands, std::move(letters));
}

std::vector<int> word_permutation(const BraidWord& w) {
    std::vector<int> img(w.strands);
    std::iota(img.begin(), img.end(), 1);  // img[p] = strand currently at position p+1
    // Track images: perm[s] = final position of strand s.
    std::vector<int> pos(w.strands);
    std::iota(pos.begin(), pos.end(), 0);  // pos-of-strand, 0-based
    std::vector<int> at(w.strands);
    std::iota(at.begin(), at.end(), 0);  // strand at position
    for (int l : w.letters) {
        int a = at[l - 1], b = at[l];
        std::swap(at[l - 1], at[l]);
        pos[a] = l;
        pos[b] = l - 1;
    }
    std::vector<int> perm(w.strands);
    for (int s = 0; s < w.strands; ++s) perm[s] = pos[s] + 1;
    return perm;
}

static int cycle_count(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<char> seen(n, 0);
    int cycles = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++cycles;
        int cur = s;
        while (!seen[cur]) {
            seen[cur] = 1;
            cur = perm[cur] - 1;
        }
    }
    return cycles;
}

// Connected blocks of strands: strands i, i+1 are joined when sigma_i occurs.
static int strand_blocks(const BraidWord& w) {
    std::vector<char> used(std::max(w.strands, 1), 0);
    for (int l : w.letters) used[l] = 1;
    int blocks = 1;
    for (int i = 1; i <= w.strands - 1; ++i)
        if (!used[i]) ++blocks;
    return blocks;
}

ClosureSummary closure_summary(const BraidWord& w) {
    ClosureSummary s;
    s.strands = w.strands;
    s.crossings = w.length();
    s.permutation = word_permutation(w);
    s.components = cycle_count(s.permutation);
    s.blocks = strand_blocks(w);
    s.split = s.blocks > 1;
    s.betti = s.crossings - w.strands + s.blocks;
    int twice_genus = s.betti - s.components + s.blocks;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw PreconditionError("inconsistent closure data");  // cannot happen for valid words
    s.genus = twice_genus / 2;
    s.prime = !s.split && linking_graph_connected(w);
    return s;
}

BraidWord apply_move(const BraidWord& w, const Move& m) {
    const auto& ls = w.letters;
    const int n = w.length();
    switch (m.kind) {
        case MoveKind::FarCommutation: {
            if (m.pos < 0 || m.pos + 1 >= n) throw MoveError("far commutation: position out of range");
            int a = ls[m.pos], b = ls[m.pos + 1];
            if (std::abs(a - b) < 2) throw MoveError("far commutation: letters are adjacent generators");
            auto out = ls;
            std::swap(out[m.pos], out[m.pos + 1]);
            return BraidWord(w.strands, std::move(out));
        }
        case MoveKind::BraidRelation: {
            if (m.pos < 0 || m.pos + 2 >= n) throw MoveError("braid relation: position out of range");
            int a = ls[m.pos], b = ls[m.pos + 1], c = ls[m.pos + 2];
            if (a != c || std::abs(a - b) != 1) throw MoveError("braid relation: pattern mismatch");
            auto out = ls;
            out[m.pos] = b;
            out[m.pos + 1] = a;
            out[m.pos + 2] = b;
            return BraidWord(w.strands, std::move(out));
        }
        case MoveKind::ElementaryConjugation: {
            if (n == 0) throw MoveError("conjugation: empty word");
            auto out = ls;
            if (m.aux >= 0) {
                std::rotate(out.begin(), out.end() - 1, out.end());  // beta sigma -> sigma beta
            } else {
                std::rotate(out.begin(), out.begin() + 1, out.end());
            }
            return BraidWord(w.strands, std::move(out));
        }
        case MoveKind::MarkovStabilize: {
            auto out = ls;
            out.push_back(w.strands);
            return BraidWord(w.strands + 1, std::move(out));
        }
        case MoveKind::MarkovDestabilize: {
            if (w.strands < 2) throw MoveError("destabilize: no strand to remove");
            int top = w.strands - 1;
            int count = static_cast<int>(std::count(ls.begin(), ls.end(), top));
            if (count != 1) throw MoveError("destabilize: sigma_{N-1} must occur exactly once");
            std::vector<int> out;
            out.reserve(n - 1);
            for (int l : ls)
                if (l != top) out.push_back(l);
            return BraidWord(w.strands - 1, std::move(out));
        }
        case MoveKind::StrandReduction:
            return strand_reduce(w, m.pos);
    }
    throw MoveError("unknown move kind");
}

// --- strand reduction -------------------------------------------------------

namespace {

// Positions (in w) of the letters of the two-column subword, plus the letters.
struct TwoColumn {
    std::vector<int> positions;
    std::vector<int> letters;  // values in {0, 1}: 0 = column i, 1 = column i+1
};

TwoColumn two_column(const BraidWord& w, int col) {
    TwoColumn tc;
    for (int p = 0; p < w.length(); ++p) {
        if (w.letters[p] == col || w.letters[p] == col + 1) {
            tc.positions.push_back(p);
            tc.letters.push_back(w.letters[p] == col ? 0 : 1);
        }
    }
    return tc;
}

// Matches the cyclic subword against lo^a hi lo hi^b starting at offset r.
// Returns the subword indices of the isolated hi and lo letters on success.
std::optional<std::pair<int, int>> match_normal_form(const std::vector<int>& sub, int r) {
    const int m = static_cast<int>(sub.size());
    auto at = [&](int k) { return sub[(r + k) % m]; };
    int k = 0;
    while (k < m && at(k) == 0) ++k;  // lo^a
    if (k >= m || at(k) != 1) return std::nullopt;
    int hi_at = k;
    ++k;
    if (k >= m || at(k) != 0) return std::nullopt;
    int lo_at = k;
    ++k;
    while (k < m && at(k) == 1) ++k;  // hi^b
    if (k != m) return std::nullopt;
    return std::make_pair((r + hi_at) % m, (r + lo_at) % m);
}

}  // namespace

BraidWord strand_reduce(const BraidWord& w, int column, int budget) {
    if (w.strands < 3) throw PreconditionError("strand reduction needs N >= 3");
    if (column < 1 || column + 1 > w.strands - 1)
        throw PreconditionError("strand reduction: column out of range");
    if (!closure_summary(w).prime) throw PreconditionError("strand reduction needs a prime word");
    {
        BraidWord sub = two_column_subword(w, column);
        if (!linking_graph_is_path(sub))
            throw PreconditionError("two-column linking graph is not a path");
    }

    // Find a rotation of the cyclic two-column subword matching lo^a hi lo hi^b,
    // trying the word as given and then its reversal.
    int steps = 0;
    for (int flip = 0; flip < 2; ++flip) {
        BraidWord cur = w;
        if (flip) {
            auto rev = w.letters;
            std::reverse(rev.begin(), rev.end());
            cur = BraidWord(w.strands, std::move(rev));
        }
        TwoColumn tc = two_column(cur, column);
        const int m = static_cast<int>(tc.letters.size());
        if (m < 2) continue;
        for (int r = 0; r < m; ++r) {
            if (++steps > budget) throw MoveError("strand reduction: normalization budget exhausted");
            auto hit = match_normal_form(tc.letters, r);
            if (!hit) continue;
            int hi_pos = tc.positions[hit->first];   // the isolated sigma_{i+1}
            int lo_pos = tc.positions[hit->second];  // the last sigma_i

            // Cyclic structure: [hi][between][lo][rest]. The letters between the
            // block are not in columns i, i+1; between-highs leave the block to
            // the right (past the lone sigma_i) and between-lows to the left, all
            // by far commutations. The rest then sorts into highs-then-lows: its
            // sigma_{i+1} letters all precede its sigma_i letters, so no blocked
            // pair arises. Rotating the block to the front gives
            //   sigma_{i+1} sigma_i  H  L
            // with H in <sigma_{i+1}..> and L in <sigma_1..sigma_i>, and the band
            // slide removes the lone sigma_{i+1}:
            //   output = sigma_i  L  shift(H).
            const int n = cur.length();
            std::vector<int> rest_high, rest_low, btw_high, btw_low;
            bool past_hi = false;
            for (int k = 1; k < n; ++k) {
                int p = (lo_pos + k) % n;
                if (p == hi_pos) {
                    past_hi = true;
                    continue;
                }
                if (p == lo_pos) break;
                int l = cur.letters[p];
                if (++steps > budget)
                    throw MoveError("strand reduction: normalization budget exhausted");
                if (l >= column + 1)
                    (past_hi ? btw_high : rest_high).push_back(l);
                else
                    (past_hi ? btw_low : rest_low).push_back(l);
            }

            std::vector<int> out;
            out.reserve(n - 1);
            out.push_back(column);
            for (int l : rest_low) out.push_back(l);
            for (int l : btw_low) out.push_back(l);
            for (int l : btw_high) out.push_back(l - 1);
            for (int l : rest_high) out.push_back(l - 1);
            return BraidWord(w.strands - 1, std::move(out));
        }
    }
    throw PreconditionError("two-column subword does not normalize to the reducible form");
}

// --- Garside half twist -----------------------------------------------------

namespace {

// Permutation braids represented by their permutation pi (0-based, pi[p] =
// final position of the strand entering at position p); composition is
// top-to-bottom, (x*y)(p) = y[x[p]].
using Perm = std::vector<int>;

Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool perm_is_identity(const Perm& p) {
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        if (p[i] != i) return false;
    return true;
}

Perm perm_inverse(const Perm& p) {
    Perm inv(p.size());
    for (int i = 0; i < static_cast<int>(p.size()); ++i) inv[p[i]] = i;
    return inv;
}

// x * sigma_i stays a permutation braid iff the strands at positions i, i+1
// after x have not crossed yet.
bool can_append(const Perm& x, int i) {
    Perm inv = perm_inverse(x);
    return inv[i] < inv[i + 1];
}

void append_gen(Perm& x, int i) {
    for (auto& v : x)
        if (v == i)
            v = i + 1;
        else if (v == i + 1)
            v = i;
}

// sigma_i left-divides the permutation braid y iff y crosses the strands
// entering at positions i, i+1.
bool left_divisible(const Perm& y, int i) { return y[i] > y[i + 1]; }

void strip_gen(Perm& y, int i) { std::swap(y[i], y[i + 1]); }

}  // namespace

bool half_twist_divides(const BraidWord& w) {
    const int n = w.strands;
    const int half_len = n * (n - 1) / 2;
    if (w.length() < half_len) return false;
    if (n == 1) return true;

    // Left-greedy factorization into permutation braids (Elrifai-Morton style
    // local slides); the half twist divides w iff the first factor is the full
    // reversal.
    std::vector<Perm> factors;
    for (int l : w.letters) {
        int i = l - 1;
        if (!factors.empty() && can_append(factors.back(), i)) {
            append_gen(factors.back(), i);
        } else {
            Perm f = perm_identity(n);
            append_gen(f, i);
            factors.push_back(std::move(f));
        }
        // Restore left-weightedness by sliding generators toward the front.
        for (int j = static_cast<int>(factors.size()) - 1; j >= 1; --j) {
            bool moved = false;
            for (int g = 0; g < n - 1; ++g) {
                while (left_divisible(factors[j], g) && can_append(factors[j - 1], g)) {
                    strip_gen(factors[j], g);
                    append_gen(factors[j - 1], g);
                    moved = true;
                }
            }
            if (perm_is_identity(factors[j])) factors.erase(factors.begin() + j);
            if (!moved) break;
        }
    }
    if (factors.empty()) return false;
    const Perm& head = factors.front();
    for (int p = 0; p < n; ++p)
        if (head[p] != n - 1 - p) return false;
    return true;
}

std::string move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::FarCommutation: return "far-commutation";
        case MoveKind::BraidRelation: return "braid-relation";
        case MoveKind::ElementaryConjugation: return "conjugation";
        case MoveKind::MarkovStabilize: return "stabilize";
        case MoveKind::MarkovDestabilize: return "destabilize";
        case MoveKind::StrandReduction: return "strand-reduction";
    }
    return "?";
}

std::optional<MoveKind> move_kind_from_name(const std::string& s) {
    if (s == "far-commutation") return MoveKind::FarCommutation;
    if (s == "braid-relation") return MoveKind::BraidRelation;
    if (s == "conjugation") return MoveKind::ElementaryConjugation;
    if (s == "stabilize") return MoveKind::MarkovStabilize;
    if (s == "destabilize") return MoveKind::MarkovDestabilize;
    if (s == "strand-reduction") return MoveKind::StrandReduction;
    return std::nullopt;
}

}  // namespace braidtk
