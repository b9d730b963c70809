#include "tknot/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <vector>

namespace tknot {

namespace {

struct P {
    double x = 0, y = 0;
};

P operator+(P a, P b) { return {a.x + b.x, a.y + b.y}; }
P operator-(P a, P b) { return {a.x - b.x, a.y - b.y}; }
P operator*(double k, P a) { return {k * a.x, k * a.y}; }

// Each crossing sits at the barycentre of its neighbours' lifts.
std::vector<P> harmonic_layout(const Projection& p) {
    int n = p.n;
    std::vector<P> pos(n);
    for (int c = 0; c < n; ++c) pos[c] = {0.5 + 0.3 * std::cos(2 * M_PI * c / n), 0.5 + 0.3 * std::sin(2 * M_PI * c / n)};
    for (int it = 0; it < 400; ++it) {
        for (int c = 1; c < n; ++c) {
            P acc;
            for (int s = 0; s < 4; ++s) {
                int h = 4 * c + s, g = p.pair[h];
                Vec2 w = p.wind[h];
                acc = acc + (pos[crossing_of(g)] + P{double(w.u), double(w.v)});
            }
            pos[c] = 0.25 * acc;
        }
    }
    for (int c = 0; c < n; ++c) {
        pos[c].x -= std::floor(pos[c].x);
        pos[c].y -= std::floor(pos[c].y);
    }
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < c; ++d) {
            P diff = pos[c] - pos[d];
            if (std::hypot(diff.x, diff.y) < 0.05) {
                pos[c].x = std::fmod(pos[c].x + 0.17 + 0.09 * c, 1.0);
                pos[c].y = std::fmod(pos[c].y + 0.11 + 0.07 * c, 1.0);
            }
        }
    return pos;
}

P slot_dir(int s) {
    double t = M_PI / 4 + s * M_PI / 2;
    return {std::cos(t), std::sin(t)};
}

bool is_over_slot(const Diagram& d, int h) { return slot_of(h) % 2 == d.over[crossing_of(h)]; }

}  // namespace

std::string render_svg(const Diagram& d, int size_px) {
    const double S = size_px;
    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px << "\" height=\"" << size_px
       << "\" viewBox=\"0 0 " << size_px << ' ' << size_px << "\">\n";
    os << "<defs><clipPath id=\"torus\"><rect x=\"0\" y=\"0\" width=\"" << S << "\" height=\"" << S
       << "\"/></clipPath></defs>\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << S << "\" height=\"" << S
       << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"6 4\"/>\n";
    os << "<g clip-path=\"url(#torus)\" fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
    auto pt = [&](P q) {
        std::ostringstream o;
        o << std::fixed << std::setprecision(2) << q.x * S << ',' << (1 - q.y) * S;
        return o.str();
    };
    if (d.n() == 0) {
        Vec2 c = d.proj.circle;
        os << "<g class=\"edge\">";
        if (c.is_zero()) {
            os << "<circle cx=\"" << 0.5 * S << "\" cy=\"" << 0.5 * S << "\" r=\"" << 0.2 * S << "\"/>";
        } else {
            P dir{double(c.u), double(c.v)};
            for (int i = -2; i <= 2; ++i)
                for (int j = -2; j <= 2; ++j) {
                    P a{0.5 + i, 0.5 + j};
                    os << "<path d=\"M" << pt(a) << " L" << pt(a + dir) << "\"/>";
                }
        }
        os << "</g>\n</g>\n</svg>\n";
        return os.str();
    }
    const Projection& p = d.proj;
    auto pos = harmonic_layout(p);
    const double arm = 0.15, gap = 0.025;
    for (int h = 0; h < 4 * p.n; ++h) {
        int g = p.pair[h];
        if (g < h) continue;
        Vec2 w = p.wind[h];
        P a = pos[crossing_of(h)];
        P b = pos[crossing_of(g)] + P{double(w.u), double(w.v)};
        P ab = b - a;
        double len = std::hypot(ab.x, ab.y);
        bool straight = len > 1e-6;
        P u = straight ? (1 / len) * ab : slot_dir(slot_of(h));
        P a0 = is_over_slot(d, h) ? a : a + gap * u;
        P b0 = is_over_slot(d, g) ? b : b - gap * u;
        P ca = a + arm * slot_dir(slot_of(h)), cb = b + arm * slot_dir(slot_of(g));
        os << "<g class=\"edge\" data-dart=\"" << h << "\">";
        for (long long i = -1 - std::max(0LL, w.u); i <= 1 - std::min(0LL, w.u); ++i)
            for (long long j = -1 - std::max(0LL, w.v); j <= 1 - std::min(0LL, w.v); ++j) {
                P t{double(i), double(j)};
                if (straight)
                    os << "<path d=\"M" << pt(a0 + t) << " L" << pt(b0 + t) << "\"/>";
                else
                    os << "<path d=\"M" << pt(a0 + t) << " C" << pt(ca + t) << ' ' << pt(cb + t) << ' ' << pt(b0 + t)
                       << "\"/>";
            }
        os << "</g>\n";
    }
    os << "</g>\n";
    for (int c = 0; c < p.n; ++c)
        os << "<circle class=\"crossing\" cx=\"" << pos[c].x * S << "\" cy=\"" << (1 - pos[c].y) * S
           << "\" r=\"2\" fill=\"red\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace tknot
