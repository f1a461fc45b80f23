"""Pure-Python pair-scan engine.

Works on denominator-cleared integer coordinates: every coordinate is
``(A + B*sqrt(d)) / S`` for a drawing-wide scale S, so orientation tests
reduce to integer arithmetic.  This module is the fallback for the
compiled kernel in ``_pairscan``; both produce identical results.

Pair codes: 2 = proper cross, 3 = touch, 4 = collinear overlap.
Shared endpoints and disjoint pairs are not reported.
"""

from __future__ import annotations

from math import isqrt

CODE_CROSS = 2
CODE_TOUCH = 3
CODE_OVERLAP = 4

_K = 1024  # sub-cell resolution for conservative sqrt(d) interval bounds


def _sign_quad(u: int, v: int, d: int) -> int:
    # sign of u + v*sqrt(d)
    if v == 0:
        return 0 if u == 0 else (1 if u > 0 else -1)
    if u == 0:
        return 1 if v > 0 else -1
    su = 1 if u > 0 else -1
    sv = 1 if v > 0 else -1
    if su == sv:
        return su
    lhs = u * u
    rhs = v * v * d
    if lhs == rhs:
        return 0
    return su if lhs > rhs else sv


class _Scan:
    def __init__(self, xa, xb, ya, yb, eu, ev, d, cell):
        self.xa = list(xa)
        self.xb = list(xb)
        self.ya = list(ya)
        self.yb = list(yb)
        self.eu = list(eu)
        self.ev = list(ev)
        self.d = d
        self.cell = max(1, int(cell))
        sq = isqrt(d * _K * _K)
        self._sq_lo = sq
        self._sq_hi = sq + 1

    # -- conservative integer bounds ---------------------------------

    def _klo(self, a: int, b: int) -> int:
        return a * _K + b * (self._sq_lo if b >= 0 else self._sq_hi)

    def _khi(self, a: int, b: int) -> int:
        return a * _K + b * (self._sq_hi if b >= 0 else self._sq_lo)

    def _edge_box(self, e: int):
        u, v = self.eu[e], self.ev[e]
        xlo = min(self._klo(self.xa[u], self.xb[u]), self._klo(self.xa[v], self.xb[v]))
        xhi = max(self._khi(self.xa[u], self.xb[u]), self._khi(self.xa[v], self.xb[v]))
        ylo = min(self._klo(self.ya[u], self.yb[u]), self._klo(self.ya[v], self.yb[v]))
        yhi = max(self._khi(self.ya[u], self.yb[u]), self._khi(self.ya[v], self.yb[v]))
        return xlo, xhi, ylo, yhi

    # -- exact predicates on integer coordinates ----------------------

    def _orient(self, p: int, q: int, r: int) -> int:
        xa, xb, ya, yb, d = self.xa, self.xb, self.ya, self.yb, self.d
        ax1 = xa[q] - xa[p]
        bx1 = xb[q] - xb[p]
        ay1 = ya[q] - ya[p]
        by1 = yb[q] - yb[p]
        ax2 = xa[r] - xa[p]
        bx2 = xb[r] - xb[p]
        ay2 = ya[r] - ya[p]
        by2 = yb[r] - yb[p]
        u = ax1 * ay2 + d * bx1 * by2 - (ay1 * ax2 + d * by1 * bx2)
        v = ax1 * by2 + bx1 * ay2 - (ay1 * bx2 + by1 * ax2)
        return _sign_quad(u, v, d)

    def _cmp_coord(self, p: int, q: int, axis: int) -> int:
        if axis == 0:
            return _sign_quad(self.xa[p] - self.xa[q], self.xb[p] - self.xb[q], self.d)
        return _sign_quad(self.ya[p] - self.ya[q], self.yb[p] - self.yb[q], self.d)

    def _same_point(self, p: int, q: int) -> bool:
        return (
            self.xa[p] == self.xa[q]
            and self.xb[p] == self.xb[q]
            and self.ya[p] == self.ya[q]
            and self.yb[p] == self.yb[q]
        )

    def _within_closed(self, p: int, a: int, b: int) -> bool:
        # p collinear with segment ab
        axis = 0 if self._cmp_coord(a, b, 0) != 0 else 1
        sa = self._cmp_coord(p, a, axis)
        sb = self._cmp_coord(p, b, axis)
        return sa == 0 or sb == 0 or sa != sb

    def _within_open(self, p: int, a: int, b: int) -> bool:
        axis = 0 if self._cmp_coord(a, b, 0) != 0 else 1
        sa = self._cmp_coord(p, a, axis)
        sb = self._cmp_coord(p, b, axis)
        return sa != 0 and sb != 0 and sa != sb

    def _classify(self, e: int, f: int) -> int:
        p1, p2 = self.eu[e], self.ev[e]
        q1, q2 = self.eu[f], self.ev[f]
        o1 = self._orient(q1, q2, p1)
        o2 = self._orient(q1, q2, p2)
        o3 = self._orient(p1, p2, q1)
        o4 = self._orient(p1, p2, q2)

        if o1 == 0 and o2 == 0 and o3 == 0 and o4 == 0:
            axis = 0 if self._cmp_coord(p1, p2, 0) != 0 else 1
            plo, phi = (p1, p2) if self._cmp_coord(p1, p2, axis) < 0 else (p2, p1)
            qlo, qhi = (q1, q2) if self._cmp_coord(q1, q2, axis) < 0 else (q2, q1)
            lo = plo if self._cmp_coord(plo, qlo, axis) > 0 else qlo
            hi = phi if self._cmp_coord(phi, qhi, axis) < 0 else qhi
            c = self._cmp_coord(lo, hi, axis)
            if c < 0:
                return CODE_OVERLAP
            return 0  # disjoint or single shared endpoint

        if (
            self._same_point(p1, q1)
            or self._same_point(p1, q2)
            or self._same_point(p2, q1)
            or self._same_point(p2, q2)
        ):
            return 0

        if o1 * o2 < 0 and o3 * o4 < 0:
            return CODE_CROSS

        if o1 == 0 and self._within_closed(p1, q1, q2):
            return CODE_TOUCH
        if o2 == 0 and self._within_closed(p2, q1, q2):
            return CODE_TOUCH
        if o3 == 0 and self._within_closed(q1, p1, p2):
            return CODE_TOUCH
        if o4 == 0 and self._within_closed(q2, p1, p2):
            return CODE_TOUCH
        return 0

    # -- scans ---------------------------------------------------------

    def pairs(self):
        m = len(self.eu)
        span = _K * self.cell
        boxes = [self._edge_box(e) for e in range(m)]
        cells: dict = {}
        ranges = []
        for e, (xlo, xhi, ylo, yhi) in enumerate(boxes):
            cx0, cx1 = xlo // span, xhi // span
            cy0, cy1 = ylo // span, yhi // span
            ranges.append((cx0, cy0))
            for cx in range(cx0, cx1 + 1):
                for cy in range(cy0, cy1 + 1):
                    cells.setdefault((cx, cy), []).append(e)
        out = []
        for (cx, cy), members in cells.items():
            k = len(members)
            for ii in range(k):
                e = members[ii]
                bxe = boxes[e]
                rxe, rye = ranges[e]
                for jj in range(ii + 1, k):
                    f = members[jj]
                    bxf = boxes[f]
                    if bxe[0] > bxf[1] or bxf[0] > bxe[1] or bxe[2] > bxf[3] or bxf[2] > bxe[3]:
                        continue
                    rxf, ryf = ranges[f]
                    # report each pair only from the first cell both occupy
                    if cx != max(rxe, rxf) or cy != max(rye, ryf):
                        continue
                    code = self._classify(e, f)
                    if code:
                        out.append((e, f, code))  # e < f: members kept in id order
        out.sort()
        return out

    def vertex_on_edge(self):
        n = len(self.xa)
        span = _K * self.cell
        vcells: dict = {}
        for v in range(n):
            xlo = self._klo(self.xa[v], self.xb[v]) // span
            xhi = self._khi(self.xa[v], self.xb[v]) // span
            ylo = self._klo(self.ya[v], self.yb[v]) // span
            yhi = self._khi(self.ya[v], self.yb[v]) // span
            for cx in range(xlo, xhi + 1):
                for cy in range(ylo, yhi + 1):
                    vcells.setdefault((cx, cy), []).append(v)
        out = []
        for e in range(len(self.eu)):
            xlo, xhi, ylo, yhi = self._edge_box(e)
            a, b = self.eu[e], self.ev[e]
            seen = set()
            for cx in range(xlo // span, xhi // span + 1):
                for cy in range(ylo // span, yhi // span + 1):
                    for v in vcells.get((cx, cy), ()):
                        if v in seen or v == a or v == b:
                            continue
                        seen.add(v)
                        if self._orient(a, b, v) == 0 and self._within_open(v, a, b):
                            out.append((v, e))
        out.sort()
        return out


def scan_pairs(xa, xb, ya, yb, eu, ev, d, cell):
    return _Scan(xa, xb, ya, yb, eu, ev, d, cell).pairs()


def scan_vertex_on_edge(xa, xb, ya, yb, eu, ev, d, cell):
    return _Scan(xa, xb, ya, yb, eu, ev, d, cell).vertex_on_edge()
