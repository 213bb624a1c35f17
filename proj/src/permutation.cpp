#include "eulerperm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace eulerperm {

namespace {

// The prefix [0, mid) is the left factor, [mid+1, end) the right factor of
// the min-decomposition; variant 1 demands the largest remaining letter on
// the right, variant 2 the smallest remaining letter.
bool is_andre_span(const std::vector<Letter>& w, std::size_t lo, std::size_t hi, int variant) {
    if (hi - lo <= 1) return true;
    std::size_t mpos = lo;
    for (std::size_t i = lo + 1; i < hi; ++i)
        if (w[i] < w[mpos]) mpos = i;
    Letter special = 0;
    bool have = false;
    for (std::size_t i = lo; i < hi; ++i) {
        if (i == mpos) continue;
        if (!have || (variant == 1 ? w[i] > special : w[i] < special)) special = w[i], have = true;
    }
    std::size_t spos = std::find(w.begin() + static_cast<long>(lo), w.begin() + static_cast<long>(hi), special) - w.begin();
    if (spos < mpos) return false;  // the decisive letter must land in the right factor
    return is_andre_span(w, lo, mpos, variant) && is_andre_span(w, mpos + 1, hi, variant);
}

bool has_double_descent(const std::vector<Letter>& w) {
    for (std::size_t i = 0; i + 2 < w.size(); ++i)
        if (w[i] > w[i + 1] && w[i + 1] > w[i + 2]) return true;
    return false;
}

void append_identity(std::vector<Letter>& out, Letter from, Letter to) {
    for (Letter v = from; v <= to; ++v) out.push_back(v);
}

// Words over the letter set `letters` in the class, by min-decomposition.
void gen_andre(const std::vector<Letter>& letters, int variant, std::vector<std::vector<Letter>>& out) {
    if (letters.size() <= 1) {
        out.push_back(letters);
        return;
    }
    std::vector<Letter> rest(letters.begin() + 1, letters.end());
    const Letter special = (variant == 1) ? rest.back() : rest.front();
    const std::size_t k = rest.size();
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<Letter> left, right;
        for (std::size_t i = 0; i < k; ++i)
            (mask >> i & 1u ? right : left).push_back(rest[i]);
        if (right.empty() || std::find(right.begin(), right.end(), special) == right.end()) continue;
        std::vector<std::vector<Letter>> ls, rs;
        gen_andre(left, variant, ls);
        gen_andre(right, variant, rs);
        for (const auto& a : ls)
            for (const auto& b : rs) {
                std::vector<Letter> w = a;
                w.push_back(letters[0]);
                w.insert(w.end(), b.begin(), b.end());
                out.push_back(std::move(w));
            }
    }
}

// Level-by-level largest-letter insertion: a slot directly before an adjacent
// descent pair would create a double descent and is skipped.
std::vector<std::vector<Letter>> gen_no_double_descent(int n) {
    std::vector<std::vector<Letter>> cur{{}};
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<Letter>> next;
        for (const auto& w : cur) {
            for (std::size_t slot = 0; slot <= w.size(); ++slot) {
                if (slot + 1 < w.size() && w[slot] > w[slot + 1]) continue;
                std::vector<Letter> v(w.begin(), w.begin() + static_cast<long>(slot));
                v.push_back(static_cast<Letter>(k));
                v.insert(v.end(), w.begin() + static_cast<long>(slot), w.end());
                next.push_back(std::move(v));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

} // namespace

Permutation::Permutation(std::vector<Letter> word) : word_(std::move(word)) {
    std::unordered_set<Letter> seen;
    for (Letter v : word_) {
        if (v == 0) throw InvalidWordError("letters must be positive");
        if (!seen.insert(v).second) throw InvalidWordError("duplicate letter in word");
    }
    const std::size_t n = word_.size();
    standard_ = true;
    for (Letter v : word_)
        if (v > n) { standard_ = false; break; }
}

Permutation Permutation::parse(std::string_view text) {
    if (text.empty() || text == "\xce\xb5") return Permutation{};
    std::vector<Letter> w;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            std::string_view tok = text.substr(pos, next == std::string_view::npos ? next : next - pos);
            while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
            while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
            if (tok.empty()) throw ParseError("empty token in comma-separated word");
            Letter v = 0;
            for (char c : tok) {
                if (c < '0' || c > '9') throw ParseError("bad character in word token");
                v = v * 10 + static_cast<Letter>(c - '0');
            }
            w.push_back(v);
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw ParseError("bad character in contiguous word");
            w.push_back(static_cast<Letter>(c - '0'));
        }
    }
    return Permutation(std::move(w));
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<Letter> w(n);
    std::iota(w.begin(), w.end(), Letter{1});
    return Permutation(std::move(w));
}

Letter Permutation::at(std::size_t pos) const {
    if (pos < 1 || pos > word_.size()) throw IndexOutOfRangeError("position out of range");
    return word_[pos - 1];
}

std::string Permutation::str() const {
    if (word_.empty()) return "\xce\xb5";
    bool small = std::all_of(word_.begin(), word_.end(), [](Letter v) { return v <= 9; });
    std::string out;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (!small && i) out += ',';
        out += std::to_string(word_[i]);
    }
    return out;
}

std::vector<int> descent_set(const Permutation& p) {
    std::vector<int> out;
    const auto& w = p.word();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) out.push_back(static_cast<int>(i) + 1);
    return out;
}

int des(const Permutation& p) { return static_cast<int>(descent_set(p).size()); }

long long maj(const Permutation& p) {
    long long s = 0;
    for (int i : descent_set(p)) s += i;
    return s;
}

Permutation inverse(const Permutation& p) {
    if (!p.is_standard()) throw NotStandardError("inverse requires a standard permutation");
    const auto& w = p.word();
    std::vector<Letter> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[w[i] - 1] = static_cast<Letter>(i + 1);
    return Permutation(std::move(out));
}

std::vector<int> idescent_set(const Permutation& p) { return descent_set(inverse(p)); }

long long inv(const Permutation& p) {
    const auto& w = p.word();
    long long c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++c;
    return c;
}

int rlmin(const Permutation& p) { return static_cast<int>(rlmin_values(p).size()); }

std::vector<Letter> rlmin_values(const Permutation& p) {
    std::vector<Letter> out;
    const auto& w = p.word();
    for (std::size_t i = w.size(); i-- > 0;)
        if (out.empty() || w[i] < out.back()) out.push_back(w[i]);
    std::reverse(out.begin(), out.end());
    return out;
}

StatVector statistics(const Permutation& p) {
    if (!p.is_standard()) throw NotStandardError("statistics require a standard permutation");
    Permutation q = p.empty() ? Permutation{} : inverse(p);
    return StatVector{des(p), maj(p), des(q), maj(q), inv(p), rlmin(p)};
}

Permutation standardize(const Permutation& p) {
    std::vector<Letter> sorted = p.word();
    std::sort(sorted.begin(), sorted.end());
    std::vector<Letter> out;
    out.reserve(p.size());
    for (Letter v : p.word()) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        out.push_back(static_cast<Letter>(it - sorted.begin()) + 1);
    }
    return Permutation(std::move(out));
}

bool is_andre1(const Permutation& p) { return is_andre_span(p.word(), 0, p.size(), 1); }
bool is_andre2(const Permutation& p) { return is_andre_span(p.word(), 0, p.size(), 2); }

bool is_simsun(const Permutation& p) {
    if (!p.is_standard()) throw NotStandardError("simsun test requires a standard permutation");
    if (p.empty()) return true;
    const std::size_t n = p.size();
    if (p.word().back() != n) return false;
    std::vector<Letter> cur = p.word();
    for (std::size_t j = n; j >= 1; --j) {
        if (has_double_descent(cur)) return false;
        cur.erase(std::find(cur.begin(), cur.end(), static_cast<Letter>(j)));
    }
    return true;
}

PermClass parse_class(std::string_view name) {
    if (name == "andre1") return PermClass::Andre1;
    if (name == "andre2") return PermClass::Andre2;
    if (name == "simsun") return PermClass::Simsun;
    if (name == "all") return PermClass::All;
    throw ParseError("unknown class name");
}

std::string class_name(PermClass cls) {
    switch (cls) {
        case PermClass::Andre1: return "andre1";
        case PermClass::Andre2: return "andre2";
        case PermClass::Simsun: return "simsun";
        case PermClass::All: return "all";
    }
    return "?";
}

std::vector<Permutation> enumerate_class_filter(PermClass cls, int n) {
    if (n < 0) throw MalformedError("negative length");
    std::vector<Letter> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), Letter{1});
    std::vector<Permutation> out;
    do {
        Permutation p{std::vector<Letter>(w)};
        bool keep = false;
        switch (cls) {
            case PermClass::Andre1: keep = is_andre1(p); break;
            case PermClass::Andre2: keep = is_andre2(p); break;
            case PermClass::Simsun: keep = is_simsun(p); break;
            case PermClass::All: keep = true; break;
        }
        if (keep) out.push_back(std::move(p));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<Permutation> enumerate_class_recursive(PermClass cls, int n) {
    if (n < 0) throw MalformedError("negative length");
    std::vector<std::vector<Letter>> words;
    switch (cls) {
        case PermClass::All:
            return enumerate_class_filter(cls, n);
        case PermClass::Andre1:
        case PermClass::Andre2: {
            std::vector<Letter> letters;
            append_identity(letters, 1, static_cast<Letter>(n));
            gen_andre(letters, cls == PermClass::Andre1 ? 1 : 2, words);
            break;
        }
        case PermClass::Simsun: {
            if (n == 0) { words.push_back({}); break; }
            for (auto& w : gen_no_double_descent(n - 1)) {
                w.push_back(static_cast<Letter>(n));
                words.push_back(std::move(w));
            }
            break;
        }
    }
    std::sort(words.begin(), words.end());
    std::vector<Permutation> out;
    out.reserve(words.size());
    for (auto& w : words) out.emplace_back(Permutation{std::move(w)});
    return out;
}

std::vector<Permutation> enumerate_class(PermClass cls, int n, int cap) {
    if (n > cap) throw ResourceLimitError("class enumeration length exceeds the cap");
    if (n <= 8) return enumerate_class_filter(cls, n);
    return enumerate_class_recursive(cls, n);
}

} // namespace eulerperm
