#include "pact/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pact::gallery {

namespace {

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

int word_digit(int w, int pos, int k, int L) {
    pos = ((pos % L) + L) % L;
    for (int i = 0; i < pos; ++i) w /= k;
    return w % k;
}

std::string word_name(int w, int k, int L) {
    std::string s(static_cast<size_t>(L), '0');
    for (int p = 0; p < L; ++p) s[static_cast<size_t>(p)] = static_cast<char>('0' + word_digit(w, p, k, L));
    return s;
}

double word_dist(int u, int v, int k, int L) {
    if (u == v) return 0.0;
    const int lo = -(L / 2), hi = (L + 1) / 2;  // positions in [lo, hi)
    int best = L;
    for (int p = lo; p < hi; ++p)
        if (word_digit(u, p, k, L) != word_digit(v, p, k, L)) best = std::min(best, std::abs(p));
    return std::ldexp(1.0, -best);  // 2^{-best}
}

struct WordAmbient {
    std::vector<std::string> names;
    Metric metric;
    std::vector<int32_t> shift;
};

WordAmbient word_ambient(int k, int L, int carrier_cap) {
    if (k < 1 || L < 2) throw std::invalid_argument("need k >= 1 and L >= 2");
    const long total = static_cast<long>(std::pow(static_cast<double>(k), L) + 0.5);
    if (total > carrier_cap)
        throw std::invalid_argument("carrier would have " + std::to_string(total) +
                                    " words, above the cap of " + std::to_string(carrier_cap));
    const int m = static_cast<int>(total);
    WordAmbient a;
    a.names.reserve(static_cast<size_t>(m));
    for (int w = 0; w < m; ++w) a.names.push_back(word_name(w, k, L));
    std::vector<double> t(static_cast<size_t>(m) * m, 0.0);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            t[static_cast<size_t>(u) * m + v] = t[static_cast<size_t>(v) * m + u] = word_dist(u, v, k, L);
    a.metric = Metric::dense(m, std::move(t));
    a.shift.resize(static_cast<size_t>(m));
    const int top = ipow(k, L - 1);
    for (int w = 0; w < m; ++w) a.shift[static_cast<size_t>(w)] = w / k + (w % k) * top;
    return a;
}

} // namespace

FinitePartialSystem cyclic_shift_model(int k, int L, int window, int carrier_cap) {
    if (window >= L) throw std::invalid_argument("window must stay below the word length");
    WordAmbient a = word_ambient(k, L, carrier_cap);
    std::vector<int32_t> all(a.names.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int32_t>(i);
    return restrict_global(a.names, a.metric, a.shift, all, window);
}

FinitePartialSystem cylinder_restriction(int k, int L, int window, const std::string& pattern,
                                         int carrier_cap) {
    if (window >= L) throw std::invalid_argument("window must stay below the word length");
    WordAmbient a = word_ambient(k, L, carrier_cap);
    std::vector<int32_t> Y;
    for (int w = 0; w < static_cast<int>(a.names.size()); ++w) {
        bool in = true;
        for (size_t p = 0; p < pattern.size(); ++p)
            if (word_digit(w, static_cast<int>(p), k, L) != pattern[p] - '0') {
                in = false;
                break;
            }
        if (in) Y.push_back(w);
    }
    if (Y.empty()) throw std::invalid_argument("no word matches the cylinder pattern");
    return restrict_global(a.names, a.metric, a.shift, Y, window);
}

FinitePartialSystem cycle_restriction(int len, const std::vector<int>& Y, int window) {
    std::vector<std::string> names;
    for (int i = 0; i < len; ++i) names.push_back(std::to_string(i));
    std::vector<double> t(static_cast<size_t>(len) * len, 1.0);
    for (int i = 0; i < len; ++i) t[static_cast<size_t>(i) * len + i] = 0.0;
    std::vector<int32_t> f(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) f[static_cast<size_t>(i)] = (i + 1) % len;
    return restrict_global(names, Metric::dense(len, std::move(t)), f,
                           std::vector<int32_t>(Y.begin(), Y.end()), window);
}

FinitePartialSystem two_cycle_fix(int window) {
    std::vector<std::string> names{"0", "1", "2"};
    std::vector<double> t{0, 1, 1, 1, 0, 1, 1, 1, 0};
    std::vector<int32_t> f{1, 0, 2};
    return restrict_global(names, Metric::dense(3, std::move(t)), f, {0, 2}, window);
}

FinitePartialSystem no_return_system(int size, int window) {
    if (size < 2 * window + 2)
        throw std::invalid_argument("cycle too short: need size >= 2*window + 2");
    std::vector<std::string> names;
    for (int i = 0; i < size; ++i) names.push_back("p" + std::to_string(i));
    const double half = size / 2;
    std::vector<double> t(static_cast<size_t>(size) * size, 0.0);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            const int c = std::min(std::abs(i - j), size - std::abs(i - j));
            t[static_cast<size_t>(i) * size + j] = c / half;
        }
    std::vector<int32_t> f(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) f[static_cast<size_t>(i)] = (i + 1) % size;
    return restrict_global(names, Metric::dense(size, std::move(t)), f, {size / 2}, window);
}

namespace {

constexpr double kSixth = 1.0 / 6.0;

bool in_lower(Vec2 p) { return p.y > kSixth && p.y < 2 * kSixth; }
bool in_upper(Vec2 p) { return p.y > 4 * kSixth && p.y < 5 * kSixth; }

PlanarPartialMap horseshoe_map() {
    PlanarPartialMap m;
    m.in_domain = [](Vec2 p) { return p.x > 0 && p.x < 1 && (in_lower(p) || in_upper(p)); };
    m.in_range = [](Vec2 p) {
        return p.y > 0 && p.y < 1 &&
               ((p.x > 4 * kSixth && p.x < 5 * kSixth) || (p.x > kSixth && p.x < 2 * kSixth));
    };
    m.fwd = [](Vec2 p) {
        if (in_lower(p)) return Vec2{(p.x + 4) / 6, 6 * p.y - 1};
        return Vec2{(p.x + 1) / 6, 6 * p.y - 4};
    };
    m.inv = [](Vec2 p) {
        if (p.x > 4 * kSixth && p.x < 5 * kSixth) return Vec2{6 * p.x - 4, (p.y + 1) / 6};
        return Vec2{6 * p.x - 1, (p.y + 4) / 6};
    };
    return m;
}

} // namespace

Vec2 horseshoe_periodic_point(const std::vector<int>& itinerary) {
    const int m = static_cast<int>(itinerary.size());
    if (m < 1) throw std::invalid_argument("empty itinerary");
    for (int b : itinerary)
        if (b != 0 && b != 1) throw std::invalid_argument("itinerary symbols must be 0 or 1");
    // y: fixed point of the inverse expanding composite; x: of the forward contraction
    double y = 0.5, x = 0.5;
    for (int round = 0; round < 64; ++round) {
        for (int j = m - 1; j >= 0; --j)
            y = itinerary[static_cast<size_t>(j)] == 0 ? (y + 1) / 6 : (y + 4) / 6;
        for (int j = 0; j < m; ++j)
            x = itinerary[static_cast<size_t>(j)] == 0 ? (x + 4) / 6 : (x + 1) / 6;
    }
    return {x, y};
}

std::vector<int> horseshoe_itinerary(Vec2 p, int depth) {
    PlanarPartialMap m = horseshoe_map();
    std::vector<int> it;
    Vec2 q = p;
    for (int i = 0; i < depth; ++i) {
        if (!m.in_domain(q)) break;
        it.push_back(in_lower(q) ? 0 : 1);
        q = m.fwd(q);
    }
    return it;
}

SampledPartialSystem horseshoe(int depth, int window, int grid_steps) {
    if (depth < 1 || depth > 12) throw std::invalid_argument("itinerary depth must be in [1, 12]");
    PlanarPartialMap map = horseshoe_map();
    std::vector<Vec2> samples;
    std::vector<std::string> names;
    for (int code = 0; code < (1 << depth); ++code) {
        std::vector<int> it(static_cast<size_t>(depth));
        std::string nm(static_cast<size_t>(depth), '0');
        for (int j = 0; j < depth; ++j) {
            it[static_cast<size_t>(j)] = (code >> j) & 1;
            nm[static_cast<size_t>(j)] = static_cast<char>('0' + it[static_cast<size_t>(j)]);
        }
        Vec2 p = horseshoe_periodic_point(it);
        if (!map.in_domain(p)) throw std::logic_error("periodic anchor left the strips");
        samples.push_back(p);
        names.push_back("it" + nm);
    }
    for (int gx = 1; gx < grid_steps; ++gx)
        for (int gy = 1; gy < grid_steps; ++gy) {
            Vec2 p{static_cast<double>(gx) / grid_steps, static_cast<double>(gy) / grid_steps};
            if (map.in_domain(p)) {
                samples.push_back(p);
                names.push_back("g" + std::to_string(gx) + "_" + std::to_string(gy));
            }
        }
    return SampledPartialSystem(std::move(map), std::move(samples), window, std::move(names));
}

namespace {

std::map<std::string, std::string> parse_params(const std::string& s) {
    std::map<std::string, std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad parameter '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

int get_int(const std::map<std::string, std::string>& p, const std::string& key, int dflt) {
    auto it = p.find(key);
    return it == p.end() ? dflt : std::stoi(it->second);
}

} // namespace

GallerySystem build(const std::string& selector) {
    const auto colon = selector.find(':');
    const std::string name = selector.substr(0, colon);
    const auto params =
        parse_params(colon == std::string::npos ? "" : selector.substr(colon + 1));

    if (name == "cyclic-shift") {
        const int L = get_int(params, "L", 10);
        return cyclic_shift_model(get_int(params, "k", 2), L,
                                  get_int(params, "window", std::min(8, L - 1)));
    }
    if (name == "cylinder") {
        const int L = get_int(params, "L", 10);
        std::string pat = params.count("pattern") ? params.at("pattern") : "01";
        return cylinder_restriction(get_int(params, "k", 2), L,
                                    get_int(params, "window", std::min(8, L - 1)), pat);
    }
    if (name == "cycle-y") {
        return cycle_restriction(get_int(params, "len", 4), {0, 1}, get_int(params, "window", 3));
    }
    if (name == "two-cycle-fix") return two_cycle_fix(get_int(params, "window", 3));
    if (name == "no-return")
        return no_return_system(get_int(params, "size", 20), get_int(params, "window", 6));
    if (name == "horseshoe")
        return horseshoe(get_int(params, "depth", 10), get_int(params, "window", 12),
                         get_int(params, "grid", 16));
    throw std::invalid_argument("unknown gallery system '" + name + "'");
}

std::vector<CatalogEntry> catalog() {
    return {
        {"cyclic-shift", "k=2,L=10,window=8", "cyclic words under the shift (global action)"},
        {"cylinder", "k=2,L=10,window=8,pattern=01", "shift model restricted to a cylinder"},
        {"cycle-y", "len=4,window=3", "rotation restricted to {0,1}, discrete metric"},
        {"two-cycle-fix", "window=3", "0<->1 with a fixed point, restricted to {0,2}"},
        {"no-return", "size=20,window=6", "translation restricted to one point; empty domains"},
        {"horseshoe", "depth=10,window=12,grid=16", "planar two-branch horseshoe, sampled"},
    };
}

} // namespace pact::gallery
