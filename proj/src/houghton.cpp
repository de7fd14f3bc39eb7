#include "ggt/houghton.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ggt {

namespace {

void require(bool cond, const std::string& msg)
{
    if (!cond) throw std::invalid_argument(msg);
}

bool is_permutation_of_rays(const std::vector<int>& sigma)
{
    std::vector<bool> seen(sigma.size(), false);
    for (int v : sigma) {
        if (v < 1 || v > static_cast<int>(sigma.size()) || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    return true;
}

int max_abs(const std::vector<int>& v)
{
    int m = 0;
    for (int x : v) m = std::max(m, std::abs(x));
    return m;
}

std::vector<int> inverse_permutation(const std::vector<int>& sigma)
{
    std::vector<int> inv(sigma.size());
    for (int i = 1; i <= static_cast<int>(sigma.size()); ++i) inv[sigma[i - 1] - 1] = i;
    return inv;
}

}  // namespace

HoughtonElement::HoughtonElement(int ray_count,
                                 std::vector<int> ray_permutation,
                                 std::vector<int> translation,
                                 std::map<RayPoint, RayPoint> correction)
    : ray_count_(ray_count),
      sigma_(std::move(ray_permutation)),
      translation_(std::move(translation)),
      correction_(std::move(correction))
{
    canonicalize_and_validate();
}

HoughtonElement HoughtonElement::identity(int ray_count)
{
    std::vector<int> sigma(ray_count);
    std::iota(sigma.begin(), sigma.end(), 1);
    return HoughtonElement(ray_count, std::move(sigma), std::vector<int>(ray_count, 0), {});
}

RayPoint HoughtonElement::eventual(const RayPoint& p) const
{
    int target_ray = sigma_[p.ray - 1];
    return RayPoint{target_ray, p.position + translation_[target_ray - 1]};
}

RayPoint HoughtonElement::apply(const RayPoint& p) const
{
    if (auto it = correction_.find(p); it != correction_.end()) return it->second;
    return eventual(p);
}

bool HoughtonElement::is_identity() const
{
    if (!correction_.empty()) return false;
    for (int i = 1; i <= ray_count_; ++i)
        if (sigma_[i - 1] != i || translation_[i - 1] != 0) return false;
    return true;
}

void HoughtonElement::canonicalize_and_validate()
{
    require(ray_count_ >= 1, "ray count must be >= 1");
    require(static_cast<int>(sigma_.size()) == ray_count_, "sigma size must equal ray count");
    require(static_cast<int>(translation_.size()) == ray_count_,
            "translation size must equal ray count");
    require(is_permutation_of_rays(sigma_), "sigma must be a permutation of the rays");
    require(std::accumulate(translation_.begin(), translation_.end(), 0) == 0,
            "translation entries must sum to zero");

    int max_pos = 1;
    for (const auto& [key, value] : correction_) {
        require(key.ray >= 1 && key.ray <= ray_count_ && key.position >= 1,
                "correction domain point outside X_n");
        require(value.ray >= 1 && value.ray <= ray_count_ && value.position >= 1,
                "correction value outside X_n");
        max_pos = std::max({max_pos, key.position, value.position});
    }

    // Drop entries that agree with the eventual rule; the stored map stays
    // minimal and sorted, so equality is representation comparison.
    std::erase_if(correction_, [this](const auto& kv) { return eventual(kv.first) == kv.second; });

    // Injectivity on a box tall enough that anything above it is governed
    // by the eventual rule alone; together with the zero-sum translation
    // this pins down a bijection of X_n.
    int height = max_pos + max_abs(translation_) + 1;
    std::unordered_set<RayPoint> images;
    images.reserve(static_cast<std::size_t>(ray_count_) * height);
    for (int ray = 1; ray <= ray_count_; ++ray) {
        for (int pos = 1; pos <= height; ++pos) {
            RayPoint image = apply(RayPoint{ray, pos});
            require(image.position >= 1 && image.ray >= 1 && image.ray <= ray_count_,
                    "element maps " + to_string(RayPoint{ray, pos}) + " outside X_n");
            require(images.insert(image).second, "element is not injective near the origin");
        }
    }
}

HoughtonElement houghton_generator(int i, int n)
{
    require(n >= 2, "houghton_generator: ray count must be >= 2");
    require(i >= 1 && i <= n - 1, "houghton_generator: index must satisfy 1 <= i <= n-1");
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    std::vector<int> a(n, 0);
    a[0] = -1;
    a[i] = 1;
    return HoughtonElement(n, std::move(sigma), std::move(a),
                           {{RayPoint{1, 1}, RayPoint{i + 1, 1}}});
}

HoughtonElement beta(int ray_count)
{
    require(ray_count >= 2, "beta: ray count must be >= 2");
    std::vector<int> sigma(ray_count);
    std::iota(sigma.begin(), sigma.end(), 1);
    return HoughtonElement(ray_count, std::move(sigma), std::vector<int>(ray_count, 0),
                           {{RayPoint{1, 1}, RayPoint{2, 1}}, {RayPoint{2, 1}, RayPoint{1, 1}}});
}

HoughtonElement alpha(const std::vector<int>& sigma)
{
    require(!sigma.empty() && is_permutation_of_rays(sigma), "alpha: not a permutation");
    require(sigma[0] == 1, "alpha: sigma must fix ray 1");
    int n = static_cast<int>(sigma.size());
    return HoughtonElement(n, sigma, std::vector<int>(n, 0), {});
}

HoughtonElement compose(const HoughtonElement& f, const HoughtonElement& g)
{
    require(f.ray_count() == g.ray_count(), "compose: ray count mismatch");
    int n = f.ray_count();

    const auto& sf = f.ray_permutation();
    const auto& sg = g.ray_permutation();
    std::vector<int> sigma(n), translation(n);
    for (int i = 1; i <= n; ++i) sigma[i - 1] = sf[sg[i - 1] - 1];
    auto sf_inv = inverse_permutation(sf);
    for (int j = 1; j <= n; ++j)
        translation[j - 1] = f.translation()[j - 1] + g.translation()[sf_inv[j - 1] - 1];

    // f(g(p)) can deviate from the composed eventual rule only where g
    // deviates or where g lands in f's correction region.
    int bound = 1;
    for (const auto& [key, value] : g.correction()) bound = std::max(bound, key.position);
    int f_corr_pos = 0;
    for (const auto& [key, value] : f.correction()) f_corr_pos = std::max(f_corr_pos, key.position);
    bound = std::max(bound, f_corr_pos + max_abs(g.translation()));

    std::map<RayPoint, RayPoint> correction;
    for (int ray = 1; ray <= n; ++ray) {
        for (int pos = 1; pos <= bound; ++pos) {
            RayPoint p{ray, pos};
            correction.emplace(p, f.apply(g.apply(p)));
        }
    }
    return HoughtonElement(n, std::move(sigma), std::move(translation), std::move(correction));
}

HoughtonElement invert(const HoughtonElement& f)
{
    int n = f.ray_count();
    auto sigma = inverse_permutation(f.ray_permutation());
    std::vector<int> translation(n);
    for (int k = 1; k <= n; ++k)
        translation[k - 1] = -f.translation()[f.ray_permutation()[k - 1] - 1];

    std::unordered_map<RayPoint, RayPoint> reverse;
    int bound = 1;
    for (const auto& [key, value] : f.correction()) {
        reverse.emplace(value, key);
        bound = std::max({bound, key.position, value.position});
    }
    bound += max_abs(f.translation()) + 1;

    // Preimage lookup: a corrected value, else the inverted eventual rule.
    auto preimage = [&](const RayPoint& q) {
        if (auto it = reverse.find(q); it != reverse.end()) return it->second;
        int source_ray = sigma[q.ray - 1];
        return RayPoint{source_ray, q.position - f.translation()[q.ray - 1]};
    };

    std::map<RayPoint, RayPoint> correction;
    for (int ray = 1; ray <= n; ++ray)
        for (int pos = 1; pos <= bound; ++pos) {
            RayPoint q{ray, pos};
            correction.emplace(q, preimage(q));
        }
    return HoughtonElement(n, std::move(sigma), std::move(translation), std::move(correction));
}

bool canonical_equal(const HoughtonElement& f, const HoughtonElement& g)
{
    require(f.ray_count() == g.ray_count(), "canonical_equal: ray count mismatch");
    return f == g;
}

std::string format_element(const HoughtonElement& f)
{
    std::ostringstream out;
    out << "n=" << f.ray_count() << "; sigma=" << cycles_from_permutation(f.ray_permutation())
        << "; t=";
    for (int j = 0; j < f.ray_count(); ++j) {
        if (j) out << ",";
        out << f.translation()[j];
    }
    out << "; corr=";
    if (f.correction().empty()) {
        out << "-";
    } else {
        bool first = true;
        for (const auto& [key, value] : f.correction()) {
            if (!first) out << " ";
            first = false;
            out << to_string(key) << "->" << to_string(value);
        }
    }
    return out.str();
}

namespace {

std::string trimmed(const std::string& s)
{
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

RayPoint parse_point(const std::string& s)
{
    int ray = 0, pos = 0;
    char l = 0, c = 0, r = 0;
    std::istringstream in(trimmed(s));
    if (!(in >> l >> ray >> c >> pos >> r) || l != '(' || c != ',' || r != ')')
        throw std::invalid_argument("bad point syntax: '" + s + "'");
    return RayPoint{ray, pos};
}

}  // namespace

HoughtonElement parse_element(const std::string& text)
{
    std::map<std::string, std::string> fields;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ';')) {
        part = trimmed(part);
        auto eq = part.find('=');
        require(eq != std::string::npos, "element field missing '=': '" + part + "'");
        fields[trimmed(part.substr(0, eq))] = trimmed(part.substr(eq + 1));
    }
    require(fields.count("n") && fields.count("sigma") && fields.count("t") &&
                fields.count("corr"),
            "element text needs n, sigma, t and corr fields");

    int n = std::stoi(fields["n"]);
    auto sigma = permutation_from_cycles(fields["sigma"], n);

    std::vector<int> translation;
    std::istringstream ts(fields["t"]);
    std::string tok;
    while (std::getline(ts, tok, ',')) translation.push_back(std::stoi(trimmed(tok)));

    std::map<RayPoint, RayPoint> correction;
    if (fields["corr"] != "-") {
        std::istringstream cs(fields["corr"]);
        std::string entry;
        while (cs >> entry) {
            auto arrow = entry.find("->");
            require(arrow != std::string::npos, "correction entry missing '->'");
            correction.emplace(parse_point(entry.substr(0, arrow)),
                               parse_point(entry.substr(arrow + 2)));
        }
    }
    return HoughtonElement(n, std::move(sigma), std::move(translation), std::move(correction));
}

std::vector<int> permutation_from_cycles(const std::string& cycles, int n)
{
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    std::string s = trimmed(cycles);
    if (s == "id" || s.empty()) return sigma;

    std::size_t at = 0;
    while (at < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[at]))) {
            ++at;
            continue;
        }
        require(s[at] == '(', "cycle syntax: expected '(' in '" + cycles + "'");
        auto close = s.find(')', at);
        require(close != std::string::npos, "cycle syntax: missing ')'");
        std::vector<int> cyc;
        std::istringstream body(s.substr(at + 1, close - at - 1));
        std::string tok;
        while (std::getline(body, tok, ',')) {
            std::istringstream nums(tok);
            int v;
            while (nums >> v) cyc.push_back(v);
        }
        require(!cyc.empty(), "empty cycle");
        for (int v : cyc) require(v >= 1 && v <= n, "cycle entry outside 1..n");
        for (std::size_t i = 0; i < cyc.size(); ++i)
            sigma[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
        at = close + 1;
    }
    require(is_permutation_of_rays(sigma), "cycles do not describe a permutation");
    return sigma;
}

std::string cycles_from_permutation(const std::vector<int>& sigma)
{
    std::string out;
    std::vector<bool> seen(sigma.size(), false);
    for (int start = 1; start <= static_cast<int>(sigma.size()); ++start) {
        if (seen[start - 1] || sigma[start - 1] == start) continue;
        out += "(";
        int v = start;
        bool first = true;
        do {
            seen[v - 1] = true;
            if (!first) out += ",";
            first = false;
            out += std::to_string(v);
            v = sigma[v - 1];
        } while (v != start);
        out += ")";
    }
    return out.empty() ? "id" : out;
}

const HoughtonElement& MarkedAction::generator(const std::string& label) const
{
    for (const auto& [name, element] : generators)
        if (name == label) return element;
    throw std::invalid_argument("unknown generator label '" + label + "'");
}

MarkedAction houghton_action(int n)
{
    require(n >= 2, "houghton_action: n must be >= 2");
    MarkedAction action{n, {}};
    for (int i = 1; i <= std::max(1, n - 1); ++i)
        action.generators.emplace_back("g" + std::to_string(i), houghton_generator(i, n));
    if (n == 2) action.generators.emplace_back("beta", beta(2));
    return action;
}

MarkedAction extended_action(int n, const std::vector<int>& sigma)
{
    auto action = houghton_action(n);
    action.generators.emplace_back("alpha", alpha(sigma));
    return action;
}

MarkedAction line_action()
{
    return MarkedAction{2, {{"t", houghton_generator(1, 2)}}};
}

Word parse_word(const std::string& text)
{
    Word word;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        int exponent = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            exponent = std::stoi(tok.substr(caret + 1));
            tok = tok.substr(0, caret);
        }
        if (tok == "1" || tok == "e" || exponent == 0) continue;
        int sign = exponent > 0 ? 1 : -1;
        for (int k = 0; k < std::abs(exponent); ++k) word.push_back({tok, sign});
    }
    return word;
}

std::string format_word(const Word& w)
{
    if (w.empty()) return "e";
    std::string out;
    for (const auto& letter : w) {
        if (!out.empty()) out += " ";
        out += letter.label;
        if (letter.exponent < 0) out += "^-1";
    }
    return out;
}

RayPoint apply_word(const MarkedAction& action, const Word& w, RayPoint p)
{
    for (const auto& letter : w) {
        const auto& element = action.generator(letter.label);
        p = letter.exponent > 0 ? element.apply(p) : invert(element).apply(p);
    }
    return p;
}

HoughtonElement word_element(const MarkedAction& action, const Word& w)
{
    auto acc = HoughtonElement::identity(action.ray_count);
    for (const auto& letter : w) {
        const auto& element = action.generator(letter.label);
        acc = compose(letter.exponent > 0 ? element : invert(element), acc);
    }
    return acc;
}

}  // namespace ggt
