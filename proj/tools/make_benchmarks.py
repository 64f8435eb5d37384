#!/usr/bin/env python3
# SPDX-License-Identifier: MIT
"""Regenerates the benchmarks/ corpus.

The circuits are the standard reversible-arithmetic benchmark family in
Clifford+T form: Toffoli-level netlists lowered with the textbook
7T+6CNOT+2H decomposition. Every circuit is verified here before being
written: the Toffoli decomposition against the exact 8x8 unitary, each
netlist against its arithmetic specification on all basis states, and the
published (qubits, two-qubit count) pair for the family.
"""

import math
import os
import sys

OUT_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "benchmarks")

# ---------------------------------------------------------------------------
# Toffoli-level circuit builders. Gates are ("ccx"|"cx"|"x", qubits...).


def tof_chain(n_controls):
    """Clean-ancilla Toffoli ladder: 2n-3 Toffolis on 2n-1 qubits."""
    n = n_controls
    controls = list(range(n))
    anc = list(range(n, 2 * n - 2))
    target = 2 * n - 2
    gates = []
    up = [("ccx", controls[0], controls[1], anc[0])]
    for i in range(n - 3):
        up.append(("ccx", controls[i + 2], anc[i], anc[i + 1]))
    gates += up
    gates.append(("ccx", controls[-1], anc[-1] if anc else controls[1], target))
    gates += list(reversed(up))
    return 2 * n - 1, gates


def barenco_tof(n_controls):
    """Dirty-ancilla construction: 4(n-2) Toffolis on 2n-1 qubits."""
    n = n_controls
    controls = list(range(n))
    anc = list(range(n, 2 * n - 2))
    target = 2 * n - 2
    # T1 touches the target; the inner V-chain runs down to the base pair.
    ladder = [("ccx", controls[-1], anc[-1], target)]
    for i in range(n - 3):
        ladder.append(("ccx", controls[n - 2 - i], anc[n - 4 - i], anc[n - 3 - i]))
    base = ("ccx", controls[0], controls[1], anc[0])
    inner = ladder[1:] + [base] + list(reversed(ladder[1:]))
    seq = [ladder[0]] + inner + [ladder[0]] + inner
    return 2 * n - 1, seq


def mod5_4():
    """out ^= [x = 0 mod 5] for 4-bit x, in positive-polarity ESOP form."""
    gates = [("x", 4)]
    for q in range(4):
        gates.append(("cx", q, 4))
    for a in (0, 2):
        for b in (1, 3):
            gates.append(("ccx", a, b, 4))
    return 5, gates


def mod_mult_55():
    """out ^= 5*x mod 55 for 3-bit x (out in q3..q8), ESOP form with
    clean-ancilla decomposition of the two triple-product terms."""
    gates = [
        ("ccx", 0, 1, 7),
        ("ccx", 2, 7, 8),
        ("ccx", 0, 1, 7),
        ("cx", 2, 7),
        ("ccx", 0, 1, 6),
        ("ccx", 2, 6, 7),
        ("ccx", 0, 1, 6),
        ("cx", 1, 6),
        ("ccx", 0, 2, 6),
        ("cx", 0, 5),
        ("cx", 2, 5),
        ("cx", 1, 4),
        ("cx", 0, 3),
    ]
    return 9, gates


def vbe_adder_3():
    """Vedral-Barenco-Ekert 3-bit ripple adder: b <- a + b, carry in q9.
    Layout: (c0,a0,b0, c1,a1,b1, c2,a2,b2, c3) = q0..q9."""
    c = [0, 3, 6, 9]
    a = [1, 4, 7]
    b = [2, 5, 8]

    def carry(i):
        return [("ccx", a[i], b[i], c[i + 1]), ("cx", a[i], b[i]),
                ("ccx", c[i], b[i], c[i + 1])]

    def rcarry(i):
        return [("ccx", c[i], b[i], c[i + 1]), ("cx", a[i], b[i]),
                ("ccx", a[i], b[i], c[i + 1])]

    def total(i):
        return [("cx", a[i], b[i]), ("cx", c[i], b[i])]

    gates = []
    for i in range(3):
        gates += carry(i)
    # The textbook CNOT(a2,b2) cancels against the first CNOT of SUM(2).
    gates.append(("cx", c[2], b[2]))
    for i in (1, 0):
        gates += rcarry(i)
        gates += total(i)
    return 10, gates


# ---------------------------------------------------------------------------
# Classical verification at the Toffoli level.


def simulate(n, gates, state):
    bits = [(state >> i) & 1 for i in range(n)]
    for g in gates:
        if g[0] == "x":
            bits[g[1]] ^= 1
        elif g[0] == "cx":
            bits[g[2]] ^= bits[g[1]]
        else:
            bits[g[3]] ^= bits[g[1]] & bits[g[2]]
    out = 0
    for i, v in enumerate(bits):
        out |= v << i
    return out


def check(cond, msg):
    if not cond:
        print("FAILED:", msg)
        sys.exit(1)


def verify_tof_chain(n_controls, nq, gates):
    n = n_controls
    target = 2 * n - 2
    for x in range(1 << n):
        state = x  # controls set, ancillas and target zero
        res = simulate(nq, gates, state)
        want = x | ((1 << target) if x == (1 << n) - 1 else 0)
        check(res == want, f"tof_{n}: {x:0{n}b} -> {res:b} != {want:b}")


def verify_barenco(n_controls, nq, gates):
    n = n_controls
    target = 2 * n - 2
    for state in range(1 << nq):  # dirty ancillas: every basis state
        res = simulate(nq, gates, state)
        controls_on = all((state >> i) & 1 for i in range(n))
        want = state ^ ((1 << target) if controls_on else 0)
        check(res == want, f"barenco_tof_{n}: {state:b} -> {res:b} != {want:b}")


def verify_mod5_4(nq, gates):
    for x in range(16):
        for out in range(2):
            state = x | (out << 4)
            res = simulate(nq, gates, state)
            want = x | ((out ^ (1 if x % 5 == 0 else 0)) << 4)
            check(res == want, f"mod5_4: x={x} out={out}")


def verify_mod_mult_55(nq, gates):
    for x in range(8):
        res = simulate(nq, gates, x)
        want = x | ((5 * x % 55) << 3)
        check(res == want, f"mod_mult_55: x={x} -> {res} != {want}")


def verify_vbe_adder_3(nq, gates):
    for a in range(8):
        for b in range(8):
            state = 0
            for i in range(3):
                state |= ((a >> i) & 1) << (3 * i + 1)
                state |= ((b >> i) & 1) << (3 * i + 2)
            res = simulate(nq, gates, state)
            ra = sum(((res >> (3 * i + 1)) & 1) << i for i in range(3))
            rb = sum(((res >> (3 * i + 2)) & 1) << i for i in range(3))
            carries = [(res >> (3 * i)) & 1 for i in range(3)]
            cout = (res >> 9) & 1
            check(ra == a, f"vbe_adder_3: a clobbered {a},{b}")
            check(rb == (a + b) % 8, f"vbe_adder_3: sum wrong {a}+{b} -> {rb}")
            check(cout == (1 if a + b >= 8 else 0), f"vbe_adder_3: carry {a},{b}")
            check(carries == [0, 0, 0], f"vbe_adder_3: dirty carries {a},{b}")


# ---------------------------------------------------------------------------
# Clifford+T lowering.


def lower(gates):
    out = []
    for g in gates:
        if g[0] == "x":
            out.append(("x", g[1]))
        elif g[0] == "cx":
            out.append(("cx", g[1], g[2]))
        else:
            a, b, c = g[1], g[2], g[3]
            out += [
                ("h", c),
                ("cx", b, c), ("tdg", c),
                ("cx", a, c), ("t", c),
                ("cx", b, c), ("tdg", c),
                ("cx", a, c),
                ("t", b), ("t", c),
                ("h", c),
                ("cx", a, b), ("t", a), ("tdg", b),
                ("cx", a, b),
            ]
    return out


def verify_toffoli_decomposition():
    import numpy as np

    def gate_matrix(g, n):
        eye = np.eye(2, dtype=complex)
        h = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)
        t = np.diag([1, np.exp(1j * math.pi / 4)])
        x = np.array([[0, 1], [1, 0]], dtype=complex)
        if g[0] in ("h", "t", "tdg", "x"):
            single = {"h": h, "t": t, "tdg": t.conj().T, "x": x}[g[0]]
            mats = [single if q == g[1] else eye for q in range(n)]
            full = np.array([[1.0]], dtype=complex)
            for m in mats:  # little-endian: qubit 0 least significant
                full = np.kron(m, full)
            return full
        ctrl, tgt = g[1], g[2]
        dim = 1 << n
        full = np.zeros((dim, dim), dtype=complex)
        for i in range(dim):
            j = i ^ (1 << tgt) if (i >> ctrl) & 1 else i
            full[j, i] = 1
        return full

    seq = lower([("ccx", 0, 1, 2)])
    u = np.eye(8, dtype=complex)
    for g in seq:
        u = gate_matrix(g, 3) @ u
    want = np.eye(8, dtype=complex)
    want[[3, 7]] = 0
    want[3, 7] = want[7, 3] = 1
    check(np.abs(u - want).max() < 1e-12, "ccx decomposition mismatch")


def emit(name, nq, gates):
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{nq}];"]
    for g in gates:
        if len(g) == 2:
            lines.append(f"{g[0]} q[{g[1]}];")
        else:
            lines.append(f"{g[0]} q[{g[1]}],q[{g[2]}];")
    with open(os.path.join(OUT_DIR, name + ".qasm"), "w") as f:
        f.write("\n".join(lines) + "\n")


def main():
    os.makedirs(OUT_DIR, exist_ok=True)
    verify_toffoli_decomposition()

    published = {  # (qubits, two-qubit count)
        "mod5_4": (5, 28),
        "tof_3": (5, 18),
        "tof_4": (7, 30),
        "tof_5": (9, 42),
        "barenco_tof_3": (5, 24),
        "barenco_tof_4": (7, 48),
        "barenco_tof_5": (9, 72),
        "mod_mult_55": (9, 48),
        "vbe_adder_3": (10, 70),
    }

    circuits = {}
    for n in (3, 4, 5):
        nq, g = tof_chain(n)
        verify_tof_chain(n, nq, g)
        circuits[f"tof_{n}"] = (nq, g)
        nq, g = barenco_tof(n)
        verify_barenco(n, nq, g)
        circuits[f"barenco_tof_{n}"] = (nq, g)
    nq, g = mod5_4()
    verify_mod5_4(nq, g)
    circuits["mod5_4"] = (nq, g)
    nq, g = mod_mult_55()
    verify_mod_mult_55(nq, g)
    circuits["mod_mult_55"] = (nq, g)
    nq, g = vbe_adder_3()
    verify_vbe_adder_3(nq, g)
    circuits["vbe_adder_3"] = (nq, g)

    for name, (nq, toffoli_gates) in sorted(circuits.items()):
        lowered = lower(toffoli_gates)
        two_q = sum(1 for g in lowered if g[0] in ("cx", "cz"))
        want_nq, want_2q = published[name]
        check(nq == want_nq, f"{name}: qubits {nq} != {want_nq}")
        check(two_q == want_2q, f"{name}: two-qubit {two_q} != {want_2q}")
        emit(name, nq, lowered)
        print(f"{name}: qubits={nq} gates={len(lowered)} two_qubit={two_q}")

    print("all benchmarks verified and written to", os.path.abspath(OUT_DIR))


if __name__ == "__main__":
    main()
