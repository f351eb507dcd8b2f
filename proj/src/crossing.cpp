#include "ppk/crossing.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "ppk/errors.hpp"

namespace ppk {

namespace {

using Sym = int;
using SymWord = std::vector<Sym>;

SymWord to_sym(const Word& w, const SymAlphabet& a) {
    SymWord s;
    s.reserve(w.size());
    for (Letter l : w) s.push_back(a.index(l));
    return s;
}

SymWord sym_inverse(const SymWord& w, const SymAlphabet& a) {
    SymWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(a.inverse(*it));
    return out;
}

Sym at(const SymWord& w, long i) {
    long n = (long)w.size();
    return w[(size_t)(((i % n) + n) % n)];
}

bool sym_double_ray(const SymWord& w, const SymAlphabet& a) {
    if (w.empty()) return false;
    long n = (long)w.size();
    for (long i = 0; i < n; ++i)
        if (at(w, i + 1) == a.inverse(at(w, i))) return false;
    return true;
}

// block containing the two (distinct) letters, -1 when none
struct PairBlocks {
    int m = 0;
    std::vector<int> tab; // m*m, -1 none, -2 several (never valid for x != y)

    int operator()(Sym x, Sym y) const { return tab[(size_t)x * m + y]; }
};

PairBlocks make_pair_blocks(const SpinStructure& c) {
    PairBlocks pb;
    pb.m = c.alphabet.size();
    pb.tab.assign((size_t)pb.m * pb.m, -1);
    for (int b = 0; b < c.block_count(); ++b)
        for (int x : c.blocks[b])
            for (int y : c.blocks[b]) {
                int& cell = pb.tab[(size_t)x * pb.m + y];
                cell = cell == -1 ? b : -2;
            }
    return pb;
}

std::vector<int> hinge_cover(const SpinStructure& c) {
    std::vector<int> cover(c.alphabet.size(), 0);
    for (const auto& blk : c.blocks)
        for (int sym : blk) ++cover[sym];
    return cover;
}

// possibility-set propagation for the blocked conditions on one direction
bool blocked_one_direction(const SymWord& w, const GenericDecoration& d,
                           std::vector<std::vector<int>>& poss, std::string* reason) {
    const SpinStructure& c = d.structure;
    const SymAlphabet& a = c.alphabet;
    long n = (long)w.size();
    std::vector<int> cover = hinge_cover(c);
    poss.assign(n, {});
    for (long j = 0; j < n; ++j) {
        Sym prev_inv = a.inverse(at(w, j - 1));
        Sym cur = at(w, j);
        for (int b = 0; b < c.block_count(); ++b)
            if (c.block_has(b, prev_inv) && c.block_has(b, cur)) poss[j].push_back(b);
        if (poss[j].empty()) {
            if (reason)
                *reason = "no block contains the consecutive pair at position " + std::to_string(j);
            return false;
        }
    }
    // mu clause at hinges, iterated to a fixpoint
    bool changed = true;
    while (changed) {
        changed = false;
        for (long j = 0; j < n; ++j) {
            Sym s = at(w, j - 1);
            Sym b = at(w, j);
            Sym t = at(w, j + 1);
            if (cover[b] < 2) continue; // middle letter not a hinge
            Letter bl = a.letter(b);
            bool exempt = (s == b && t == b && a.is_involution(bl.gen));
            if (exempt) continue;
            long jn = (j + 1) % n;
            Sym b_inv = a.inverse(b);
            std::vector<int> src, dst;
            for (int i : poss[j]) {
                int tgt = d.mu_of_letter(b, i);
                if (tgt < 0) continue;
                if (!c.block_has(tgt, b_inv) || !c.block_has(tgt, t)) continue;
                if (std::find(poss[jn].begin(), poss[jn].end(), tgt) == poss[jn].end()) continue;
                src.push_back(i);
                if (std::find(dst.begin(), dst.end(), tgt) == dst.end()) dst.push_back(tgt);
            }
            std::sort(dst.begin(), dst.end());
            if (src.size() != poss[j].size()) {
                poss[j] = src;
                changed = true;
            }
            if (dst != poss[jn]) {
                poss[jn] = dst;
                changed = true;
            }
            if (poss[j].empty() || poss[jn].empty()) {
                if (reason)
                    *reason = "mu clause unsatisfiable at position " + std::to_string(j);
                return false;
            }
        }
    }
    return true;
}

// orientation flip of the step v --letter--> v', given the chain blocks at
// both ends; tau is indexed at the tail of the positively-directed edge
// (for involutions: the traversal source).
int step_flip(const GenericDecoration& d, Sym letter_idx, int block_at_source,
              int block_at_target) {
    Letter l = d.structure.alphabet.letter(letter_idx);
    if (l.inv) return d.tau[l.gen][block_at_target];
    return d.tau[l.gen][block_at_source];
}

void light_check(const GenericDecoration& d) {
    const SpinStructure& c = d.structure;
    if ((int)d.sigma.size() != c.block_count())
        throw InvalidDecoration("decoration: sigma/block count mismatch");
    for (int b = 0; b < c.block_count(); ++b) {
        std::vector<int> sup = d.sigma[b].ring;
        std::sort(sup.begin(), sup.end());
        if (sup != c.blocks[b]) throw InvalidDecoration("decoration: sigma support mismatch");
    }
    if ((int)d.tau.size() != c.alphabet.n_gens || (int)d.mu.size() != c.alphabet.n_gens)
        throw InvalidDecoration("decoration: tau/mu not total on S");
}

Letter sym_letter(const SymAlphabet& a, Sym s) { return a.letter(s); }

Alignment make_witness(const SymAlphabet& a, const SymWord& w, const SymWord& v, long p, long q,
                       long len, bool inverted) {
    Alignment al;
    for (long i = 0; i < len; ++i) al.shared.push_back(sym_letter(a, at(w, p + i)));
    al.w_branch_in = sym_letter(a, at(w, p - 1));
    al.w_branch_out = sym_letter(a, at(w, p + len));
    al.z_branch_in = sym_letter(a, at(v, q - 1));
    al.z_branch_out = sym_letter(a, at(v, q + len));
    al.w_offset = (int)p;
    al.z_offset = (int)q;
    al.z_inverted = inverted;
    return al;
}

} // namespace

bool induces_double_ray(const Word& w, const InvolutionSet& I) {
    if (w.empty()) return false;
    // a single involution letter repeats across one edge
    if (w.size() == 1 && I.contains(w[0].gen)) return false;
    Word r = cyclic_reduce(w, I);
    Word n;
    for (Letter l : w) n.push_back(I.contains(l.gen) ? Letter(l.gen, false) : l);
    return r == n;
}

BlockedResult analyze_blocked(const Word& w, const GenericDecoration& d) {
    const SymAlphabet& a = d.structure.alphabet;
    BlockedResult res;
    if (w.empty()) return res; // vacuously blocked
    SymWord ws = to_sym(w, a);
    std::vector<std::vector<int>> poss_fwd, poss_rev;
    std::string why;
    if (!blocked_one_direction(ws, d, poss_fwd, &why)) {
        res.blocked = false;
        res.reason = why;
        return res;
    }
    SymWord wi = sym_inverse(ws, a);
    if (!blocked_one_direction(wi, d, poss_rev, &why)) {
        res.blocked = false;
        res.reason = "(reverse) " + why;
        return res;
    }
    res.chain.vertex_block.resize(ws.size());
    res.chain.determinate = true;
    for (size_t j = 0; j < ws.size(); ++j) {
        if (poss_fwd[j].size() != 1) res.chain.determinate = false;
        res.chain.vertex_block[j] = poss_fwd[j].front();
    }
    return res;
}

// ==================== fast path ====================

CrossResult decide_crossing(const Word& w, const Word& z, const GenericDecoration& d) {
    light_check(d);
    const SymAlphabet& a = d.structure.alphabet;
    InvolutionSet none;
    none.member.assign(a.n_gens, false);
    if (!is_cyclically_reduced(w, none) || !is_cyclically_reduced(z, none))
        throw NotReduced("decide_crossing: words must be cyclically reduced");

    SymWord ws = to_sym(w, a), zs = to_sym(z, a);
    if (!sym_double_ray(ws, a) || !sym_double_ray(zs, a)) return {};

    BlockedResult bw = analyze_blocked(w, d);
    if (!bw.blocked) throw NotBlocked("decide_crossing: W is not blocked: " + bw.reason);
    BlockedResult bz = analyze_blocked(z, d);
    if (!bz.blocked) throw NotBlocked("decide_crossing: Z is not blocked: " + bz.reason);

    PairBlocks pb = make_pair_blocks(d.structure);
    long nw = (long)ws.size(), nz = (long)zs.size();
    long cap = nw + nz;

    for (int dir = 0; dir < 2; ++dir) {
        SymWord v = dir ? sym_inverse(zs, a) : zs;
        long nv = (long)v.size();
        for (long p = 0; p < nw; ++p) {
            for (long q = 0; q < nv; ++q) {
                if (at(ws, p - 1) == at(v, q - 1)) continue; // not start-maximal
                long len = 0;
                while (len < cap && at(ws, p + len) == at(v, q + len)) ++len;
                if (len >= cap) continue; // rays coincide for this alignment
                if (len == 0) {
                    Sym ra = a.inverse(at(ws, p - 1)), rb = at(ws, p);
                    Sym lc = a.inverse(at(v, q - 1)), ld = at(v, q);
                    if (ra == lc || ra == ld || rb == lc || rb == ld) continue; // edge share
                    int br = pb(ra, rb), bl = pb(lc, ld);
                    if (br != bl) continue; // pairs in different blocks never cross
                    if (d.sigma[br].interleaved(ra, rb, lc, ld)) {
                        CrossResult cr;
                        cr.crosses = true;
                        cr.witness = make_witness(a, ws, v, p, q, 0, dir != 0);
                        return cr;
                    }
                } else {
                    Sym ra = a.inverse(at(ws, p - 1)), lc = a.inverse(at(v, q - 1));
                    Sym u1 = at(ws, p);
                    int brx = pb(ra, u1), blx = pb(lc, u1);
                    if (brx != blx) continue; // distinct pre-blocks: nested by construction
                    // chain of pair blocks along the shared segment
                    std::vector<int> vb((size_t)len + 1);
                    vb[0] = brx;
                    for (long i = 1; i <= len; ++i)
                        vb[(size_t)i] = pb(a.inverse(at(ws, p + i - 1)), at(ws, p + i));
                    int flips = 0;
                    for (long i = 0; i < len; ++i)
                        flips ^= step_flip(d, at(ws, p + i), vb[(size_t)i], vb[(size_t)i + 1]);
                    Sym back_y = a.inverse(at(ws, p + len - 1));
                    Sym t = at(ws, p + len), t2 = at(v, q + len);
                    int sx = d.sigma[vb[0]].orient(ra, u1, lc);
                    int sy = d.sigma[vb[(size_t)len]].orient(back_y, t, t2);
                    bool crossed = ((sx != sy) != (flips != 0));
                    if (crossed) {
                        CrossResult cr;
                        cr.crosses = true;
                        cr.witness = make_witness(a, ws, v, p, q, len, dir != 0);
                        return cr;
                    }
                }
            }
        }
    }
    return {};
}

// ==================== oracle ====================

namespace {

// reduced right-multiplication of a normal form by one letter
void push_letter(SymWord& nf, Sym s, const SymAlphabet& a) {
    if (!nf.empty() && nf.back() == a.inverse(s))
        nf.pop_back();
    else
        nf.push_back(s);
}

struct Circle {
    std::vector<Sym> order; // clockwise
    int pos(Sym s) const {
        for (int i = 0; i < (int)order.size(); ++i)
            if (order[i] == s) return i;
        throw Error("oracle circle: dart missing");
    }
    // true iff walking clockwise from fwd we meet dart before back
    bool left_of(Sym fwd, Sym back, Sym dart) const {
        int n = (int)order.size();
        int pf = pos(fwd), pbk = pos(back), pd = pos(dart);
        int db = (pbk + n - pf) % n, dd = (pd + n - pf) % n;
        return dd < db;
    }
};

std::vector<Sym> arc_letters(const CyclicOrder& sigma, bool reflectop) {
    std::vector<Sym> v = sigma.ring;
    if (reflectop) std::reverse(v.begin(), v.end());
    return v;
}

// rotate so that `last` ends the list / `first` begins it
void rotate_to_last(std::vector<Sym>& v, Sym last) {
    auto it = std::find(v.begin(), v.end(), last);
    std::rotate(v.begin(), it + 1, v.end());
}
void rotate_to_first(std::vector<Sym>& v, Sym first) {
    auto it = std::find(v.begin(), v.end(), first);
    std::rotate(v.begin(), it, v.end());
}

// Canonical rotation at a shared vertex. role: 0 = contact start (a second
// involved block continues after the shared dart), 1 = contact end (the
// second block closes the circle back to the shared dart), per the hinge
// arrangement rule for distinct pre-blocks.
Circle build_circle(const GenericDecoration& d, int block_r, bool reflect_r, Sym anchor_dart,
                    int block_l, bool reflect_l, int shared_dart, int role) {
    const SpinStructure& c = d.structure;
    int m = c.alphabet.size();
    std::vector<char> placed(m, 0);
    Circle circ;
    auto place = [&](Sym s) {
        if (!placed[s]) {
            placed[s] = 1;
            circ.order.push_back(s);
        }
    };

    std::vector<Sym> ra = arc_letters(d.sigma[block_r], reflect_r);
    std::vector<Sym> tail; // letters appended after everything else (role 1)
    if (block_l >= 0 && shared_dart >= 0) {
        std::vector<Sym> la = arc_letters(d.sigma[block_l], reflect_l);
        if (role == 0) {
            rotate_to_last(ra, shared_dart);
            for (Sym s : ra) place(s);
            rotate_to_first(la, shared_dart);
            for (Sym s : la) place(s);
        } else {
            rotate_to_first(ra, shared_dart);
            for (Sym s : ra) place(s);
            rotate_to_last(la, shared_dart); // arc closes onto the shared dart
            for (Sym s : la)
                if (!placed[s]) tail.push_back(s);
            for (Sym s : tail) placed[s] = 1;
        }
    } else {
        rotate_to_first(ra, anchor_dart);
        for (Sym s : ra) place(s);
        if (block_l >= 0) {
            std::vector<Sym> la = arc_letters(d.sigma[block_l], reflect_l);
            for (Sym s : la) place(s);
        }
    }
    for (int b = 0; b < c.block_count(); ++b)
        for (Sym s : d.sigma[b].ring) place(s);
    for (Sym s : tail) circ.order.push_back(s);
    if ((int)circ.order.size() != m) throw Error("oracle circle: size mismatch");
    return circ;
}

} // namespace

CrossResult crossing_oracle(const Word& w, const Word& z, const GenericDecoration& d) {
    light_check(d);
    const SymAlphabet& a = d.structure.alphabet;
    InvolutionSet none;
    none.member.assign(a.n_gens, false);
    if (!is_cyclically_reduced(w, none) || !is_cyclically_reduced(z, none))
        throw NotReduced("crossing_oracle: words must be cyclically reduced");

    SymWord ws = to_sym(w, a), zs = to_sym(z, a);
    if (!sym_double_ray(ws, a) || !sym_double_ray(zs, a)) return {};

    BlockedResult bw = analyze_blocked(w, d);
    if (!bw.blocked) throw NotBlocked("crossing_oracle: W is not blocked: " + bw.reason);
    BlockedResult bz = analyze_blocked(z, d);
    if (!bz.blocked) throw NotBlocked("crossing_oracle: Z is not blocked: " + bz.reason);

    PairBlocks pb = make_pair_blocks(d.structure);
    long nw = (long)ws.size(), nz = (long)zs.size();
    long K = nw + nz + 1;

    // R-ray window with free-product normal forms as vertex names
    std::map<SymWord, long> rindex;
    std::vector<SymWord> rvert((size_t)(4 * K + 1));
    {
        SymWord cur; // r_0
        rvert[(size_t)(2 * K)] = cur;
        for (long j = 0; j < 2 * K; ++j) {
            push_letter(cur, at(ws, j), a);
            rvert[(size_t)(2 * K + j + 1)] = cur;
        }
        cur.clear();
        for (long j = -1; j >= -2 * K; --j) {
            push_letter(cur, a.inverse(at(ws, j)), a);
            rvert[(size_t)(2 * K + j)] = cur;
        }
        for (long j = -2 * K; j <= 2 * K; ++j) rindex[rvert[(size_t)(2 * K + j)]] = j;
    }

    auto r_back_dart = [&](long j) { return a.inverse(at(ws, j - 1)); };
    auto r_fwd_dart = [&](long j) { return at(ws, j); };

    for (long i = 0; i < nw; ++i) {
        for (long q = 0; q < nz; ++q) {
            // L-ray through r_i with Z-phase q
            std::vector<long> lshared_r, lshared_j;
            {
                SymWord cur = rvert[(size_t)(2 * K + i)];
                std::vector<std::pair<long, SymWord>> lv;
                lv.push_back({q, cur});
                for (long j = q; j < q + 2 * K; ++j) {
                    push_letter(cur, at(zs, j), a);
                    lv.push_back({j + 1, cur});
                }
                cur = rvert[(size_t)(2 * K + i)];
                for (long j = q - 1; j >= q - 2 * K; --j) {
                    push_letter(cur, a.inverse(at(zs, j)), a);
                    lv.push_back({j, cur});
                }
                for (auto& [j, vtx] : lv) {
                    auto it = rindex.find(vtx);
                    if (it != rindex.end() && std::abs(it->second) <= (long)(2 * K) - 2) {
                        lshared_j.push_back(j);
                        lshared_r.push_back(it->second);
                    }
                }
            }
            if (lshared_r.empty()) continue;
            if ((long)lshared_r.size() > nw + nz) continue; // coincident rays
            // sort by R-position; the contact must be a contiguous subpath
            std::vector<size_t> idx(lshared_r.size());
            for (size_t t = 0; t < idx.size(); ++t) idx[t] = t;
            std::sort(idx.begin(), idx.end(),
                      [&](size_t x, size_t y) { return lshared_r[x] < lshared_r[y]; });
            long s0 = lshared_r[idx.front()];
            long len = (long)idx.size() - 1;
            bool contiguous = true;
            for (size_t t = 0; t < idx.size(); ++t)
                if (lshared_r[idx[t]] != s0 + (long)t) contiguous = false;
            if (!contiguous) throw Error("oracle: contact is not a subpath");
            // L-side indices along the contact, increasing or decreasing
            std::vector<long> jL(idx.size());
            for (size_t t = 0; t < idx.size(); ++t) jL[t] = lshared_j[idx[t]];
            if (len >= 1)
                for (size_t t = 0; t + 1 < jL.size(); ++t)
                    if (std::abs(jL[t + 1] - jL[t]) != 1) throw Error("oracle: contact skips");

            auto l_darts = [&](long j) {
                return std::pair<Sym, Sym>(a.inverse(at(zs, j - 1)), at(zs, j));
            };

            // branch darts of L at the two contact ends
            Sym c_dart, d_dart;
            long bx, by; // L block at contact start / end
            if (len == 0) {
                auto [lin, lout] = l_darts(jL[0]);
                Sym ra1 = r_back_dart(s0), rb1 = r_fwd_dart(s0);
                if (lin == ra1 || lin == rb1 || lout == ra1 || lout == rb1)
                    continue; // shares an edge with R; that contact appears as a segment
                c_dart = lin;
                d_dart = lout;
                bx = by = pb(lin, lout);
            } else {
                Sym seg_first = r_fwd_dart(s0);
                Sym seg_last = a.inverse(r_fwd_dart(s0 + len - 1));
                auto [i0, o0] = l_darts(jL[0]);
                auto [i1, o1] = l_darts(jL[(size_t)len]);
                // L's dart toward the segment equals seg_first at the start
                // vertex and seg_last at the end vertex
                Sym cs, ds;
                if (i0 == seg_first)
                    cs = o0;
                else if (o0 == seg_first)
                    cs = i0;
                else
                    throw Error("oracle: L does not follow the segment");
                if (i1 == seg_last)
                    ds = o1;
                else if (o1 == seg_last)
                    ds = i1;
                else
                    throw Error("oracle: L does not follow the segment");
                c_dart = cs;
                d_dart = ds;
                if (c_dart == r_back_dart(s0) || d_dart == r_fwd_dart(s0 + len))
                    throw Error("oracle: contact not maximal");
                bx = pb(c_dart, seg_first);
                by = pb(d_dart, seg_last);
                if (bx < 0 || by < 0) throw Error("oracle: L pair not in a block");
            }

            // R chain blocks and orientation transport along the contact
            std::vector<int> rb((size_t)len + 1);
            for (long t = 0; t <= len; ++t) rb[(size_t)t] = pb(r_back_dart(s0 + t), r_fwd_dart(s0 + t));
            std::vector<bool> orient_r((size_t)len + 1);
            orient_r[0] = false; // false = sigma as written
            for (long t = 0; t < len; ++t)
                orient_r[(size_t)t + 1] =
                    orient_r[(size_t)t] ^
                    (step_flip(d, r_fwd_dart(s0 + t), rb[(size_t)t], rb[(size_t)t + 1]) != 0);

            bool side_c, side_d;
            if (len == 0) {
                int block_l = (int)bx;
                Sym ra1 = r_back_dart(s0), rb1 = r_fwd_dart(s0);
                int shared = -1;
                if (block_l != rb[0]) {
                    // blocks intersect in at most one letter
                    for (Sym sx : d.structure.blocks[rb[0]])
                        if (d.structure.block_has(block_l, sx)) shared = sx;
                }
                Circle circ = build_circle(d, rb[0], orient_r[0], ra1,
                                           block_l == rb[0] ? -1 : block_l, false, shared, 0);
                side_c = circ.left_of(rb1, ra1, c_dart);
                side_d = circ.left_of(rb1, ra1, d_dart);
            } else {
                Sym seg_first = r_fwd_dart(s0);
                Sym seg_last = a.inverse(r_fwd_dart(s0 + len - 1));
                int blx = (int)bx, bly = (int)by;
                Circle cx = build_circle(d, rb[0], orient_r[0], r_back_dart(s0),
                                         blx == rb[0] ? -1 : blx, false, seg_first, 0);
                bool refl_ly = false;
                if (bly != rb[(size_t)len] && len == 1) {
                    // transport the second block's reflection along the one
                    // shared edge, tau indexed at the positive tail as usual
                    refl_ly = step_flip(d, seg_first, blx, bly) != 0;
                }
                Circle cy = build_circle(d, rb[(size_t)len], orient_r[(size_t)len], seg_last,
                                         bly == rb[(size_t)len] ? -1 : bly, refl_ly, seg_last, 1);
                side_c = cx.left_of(seg_first, r_back_dart(s0), c_dart);
                side_d = cy.left_of(r_fwd_dart(s0 + len), seg_last, d_dart);
            }
            if (side_c != side_d) {
                CrossResult cr;
                cr.crosses = true;
                Alignment al;
                for (long t = 0; t < len; ++t) al.shared.push_back(a.letter(r_fwd_dart(s0 + t)));
                al.w_branch_in = a.letter(at(ws, s0 - 1));
                al.w_branch_out = a.letter(at(ws, s0 + len));
                al.w_offset = (int)(((s0 % nw) + nw) % nw);
                al.z_offset = (int)(((jL[0] % nz) + nz) % nz);
                al.z_inverted = len >= 1 && jL[0] > jL[(size_t)len];
                al.z_branch_in = a.letter(a.inverse(c_dart)); // letter entering the contact
                al.z_branch_out = a.letter(d_dart);           // letter leaving it
                cr.witness = al;
                return cr;
            }
        }
    }
    return {};
}

CrossResult decide_crossing(const Word& w, const Word& z, const SpecialDecoration& d) {
    return decide_crossing(w, z, lift_to_generic(d));
}

CrossResult crossing_oracle(const Word& w, const Word& z, const SpecialDecoration& d) {
    return crossing_oracle(w, z, lift_to_generic(d));
}

} // namespace ppk
