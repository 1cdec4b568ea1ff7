"""Bundle reconstruction from holonomy data, classification, and round trips.

`bundle_from_holonomy` realizes a chord-presented homomorphism as a gauge
field whose holonomy representation is that homomorphism: chords get their
assigned elements, tree edges the identity, and the marked point sits over
the basepoint with identity fiber.  `holonomy_of_bundle` goes the other way
by measuring chord-loop holonomies.  One round trip is literally the
identity; the other is witnessed by an explicit fiber-adjusting isomorphism
(`reconstruct_iso`).  Bundles whose holonomies agree up to conjugation are
isomorphic (`conjugation_iso`), and for finite groups non-conjugacy is
decidable, in which case no gauge morphism exists at all.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from .complexes import BaseComplex, SpanningTree, build_tree, chord_loops, tree_path
from .errors import (
    BaseMismatch,
    ConjugacyViolated,
    HolonomyIncompatible,
    InfiniteContext,
    NonEquivariantSpec,
)
from .gauge import (
    BundleMap,
    BundlePoint,
    EPath,
    GaugeField,
    check_bundle_morphism,
    holonomy_rep,
    horizontal_lift,
    transport,
)
from .groups import GroupCtx, GroupElement, HoloSpec
from .pathspace import AssociatedPoint, AssocPath, associated_connection
from .words import EdgeStep, PathWord, concat, reduce_word, reverse_word


@dataclass(frozen=True, eq=False)
class HolObject:
    """A pointed complex together with a chord-presented loop homomorphism."""

    complex: BaseComplex
    tree: SpanningTree
    spec: HoloSpec

    def __post_init__(self) -> None:
        if self.spec.complex != self.complex or self.spec.tree != self.tree:
            raise ValueError("holonomy spec was built over a different complex or tree")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HolObject):
            return NotImplemented
        return (
            self.complex == other.complex
            and self.tree == other.tree
            and self.spec == other.spec
        )


def hol_object(spec: HoloSpec) -> HolObject:
    return HolObject(spec.complex, spec.tree, spec)


@dataclass(frozen=True, eq=False)
class BCObject:
    """A gauge field with a marked point over the basepoint."""

    complex: BaseComplex
    tree: SpanningTree
    ctx: GroupCtx
    gauge: GaugeField
    xi0: BundlePoint

    def __post_init__(self) -> None:
        if self.gauge.complex != self.complex or self.gauge.ctx != self.ctx:
            raise ValueError("gauge field was built over a different complex or context")
        if self.xi0.base != self.complex.basepoint:
            raise BaseMismatch(
                f"marked point over {self.xi0.base!r}, basepoint is {self.complex.basepoint!r}"
            )
        self.ctx.check(self.xi0.fiber)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BCObject):
            return NotImplemented
        return (
            self.complex == other.complex
            and self.tree == other.tree
            and self.ctx == other.ctx
            and self.gauge == other.gauge
            and self.xi0 == other.xi0
        )


def bc_object(gauge: GaugeField, xi0: BundlePoint | None = None, tree: SpanningTree | None = None) -> BCObject:
    if tree is None:
        tree = build_tree(gauge.complex)
    if xi0 is None:
        xi0 = BundlePoint(gauge.complex.basepoint, gauge.ctx.identity())
    return BCObject(gauge.complex, tree, gauge.ctx, gauge, xi0)


def bundle_from_holonomy(obj: HolObject) -> BCObject:
    """Build the bundle-plus-field whose holonomy representation is the input.

    Chord labels are the assigned elements, tree labels the identity; with
    the marked point at identity fiber, every tree path transports trivially,
    so each chord loop's holonomy is exactly its label.
    """
    labels = {e.id: obj.spec.label(e.id) for e in obj.complex.edges}
    gauge = GaugeField(obj.complex, obj.spec.ctx, labels)
    xi0 = BundlePoint(obj.complex.basepoint, obj.spec.ctx.identity())
    return BCObject(obj.complex, obj.tree, obj.spec.ctx, gauge, xi0)


def holonomy_of_bundle(bc: BCObject) -> HolObject:
    """Measure the holonomy representation of a bundle on its chord loops."""
    loops = chord_loops(bc.complex, bc.tree)
    assignment = {chord: holonomy_rep(bc.gauge, bc.xi0, loop) for chord, loop in loops.items()}
    spec = HoloSpec(bc.complex, bc.tree, bc.ctx, assignment)
    return HolObject(bc.complex, bc.tree, spec)


@dataclass(frozen=True, eq=False)
class ReconstructionIso:
    """The fiber-adjusting isomorphism from the rebuilt bundle onto a bundle.

    `adjust[x]` is transport along the tree path to x applied to the marked
    fiber; forward sends a class (word, g) to (endpoint, T(word) * a * g) and
    the inverse solves that fiber equation back to a canonical class.
    """

    bc: BCObject
    spec: HoloSpec
    adjust: dict[str, GroupElement]

    def forward(self, ap: AssociatedPoint) -> BundlePoint:
        ctx = self.bc.ctx
        disp = transport(self.bc.gauge, ap.word)
        return BundlePoint(
            ap.base, ctx.mul(disp, ctx.mul(self.bc.xi0.fiber, ap.g))
        )

    def forward_canonical(self, vertex: str, g: GroupElement) -> BundlePoint:
        return BundlePoint(vertex, self.bc.ctx.mul(self.adjust[vertex], g))

    def inverse(self, xi: BundlePoint) -> tuple[str, GroupElement]:
        """Canonical class of a bundle point: fiber equation solved exactly."""
        ctx = self.bc.ctx
        return xi.base, ctx.mul(ctx.inv(self.adjust[xi.base]), xi.fiber)

    def forward_path(self, path: AssocPath) -> EPath:
        return EPath(path.word, tuple(self.forward(p).fiber for p in path.points))

    def as_bundle_map(self) -> BundleMap:
        """The same isomorphism as a fiber-adjusting morphism over the identity."""
        cx = self.bc.complex
        return BundleMap(
            {v: v for v in cx.vertices},
            {e.id: e.id for e in cx.edges},
            dict(self.adjust),
        )


def reconstruct_iso(bc: BCObject) -> ReconstructionIso:
    obj = holonomy_of_bundle(bc)
    ctx = bc.ctx
    adjust = {
        v: ctx.mul(transport(bc.gauge, tree_path(bc.tree, v)), bc.xi0.fiber)
        for v in bc.complex.vertices
    }
    return ReconstructionIso(bc, obj.spec, adjust)


def _require_comparable(bc: BCObject, other: BCObject) -> None:
    if bc.complex != other.complex:
        raise BaseMismatch("bundles live over different complexes")
    if bc.ctx != other.ctx:
        raise BaseMismatch("bundles have different structure groups")


def conjugation_iso(bc: BCObject, other: BCObject, g: GroupElement) -> BundleMap:
    """Bundle isomorphism from the relation H(loop) = g * H'(loop) * g^-1.

    Checks the relation on every chord loop and raises ConjugacyViolated at
    the first failure; on success returns the fiber-adjusting map obtained by
    pushing left multiplication by g^-1 through both reconstruction
    isomorphisms.
    """
    _require_comparable(bc, other)
    ctx = bc.ctx
    ctx.check(g)
    H = holonomy_of_bundle(bc).spec
    H2 = holonomy_of_bundle(other).spec
    for chord in sorted(H.assignment):
        if H.assignment[chord] != ctx.conjugate(g, H2.assignment[chord]):
            raise ConjugacyViolated(chord)
    iso = reconstruct_iso(bc)
    iso2 = reconstruct_iso(other)
    middle = ctx.mul(ctx.inv(g), ctx.inv(bc.xi0.fiber))
    adjust = {
        v: ctx.mul(iso2.adjust[v], ctx.mul(middle, ctx.inv(transport(bc.gauge, tree_path(bc.tree, v)))))
        for v in bc.complex.vertices
    }
    cx = bc.complex
    return BundleMap({v: v for v in cx.vertices}, {e.id: e.id for e in cx.edges}, adjust)


def find_conjugator(bc: BCObject, other: BCObject) -> GroupElement | None:
    """Search the whole (finite) group for an element realizing conjugacy."""
    _require_comparable(bc, other)
    if not bc.ctx.is_finite:
        raise InfiniteContext("conjugator search requires a finite context")
    H = holonomy_of_bundle(bc).spec.assignment
    H2 = holonomy_of_bundle(other).spec.assignment
    ctx = bc.ctx
    for g in ctx.elements():
        if all(H[c] == ctx.conjugate(g, H2[c]) for c in H):
            return g
    return None


def gauge_morphism_exists(bc: BCObject, other: BCObject) -> bool:
    """Decide existence of any fiber-adjusting morphism over the identity map.

    Any such morphism is pinned by its adjuster at the basepoint: tree edges
    propagate it to every vertex, and the remaining edges are consistency
    checks.  Trying every basepoint adjuster is therefore a complete search.
    """
    _require_comparable(bc, other)
    if not bc.ctx.is_finite:
        raise InfiniteContext("morphism search requires a finite context")
    ctx = bc.ctx
    cx = bc.complex
    for seed in ctx.elements():
        adjust: dict[str, GroupElement] = {}
        for v in cx.vertices:
            path = tree_path(bc.tree, v)
            t1 = transport(bc.gauge, path)
            t2 = transport(other.gauge, path)
            adjust[v] = ctx.mul(t2, ctx.mul(seed, ctx.inv(t1)))
        ok = all(
            ctx.mul(adjust[e.dst], bc.gauge.labels[e.id])
            == ctx.mul(other.gauge.labels[e.id], adjust[e.src])
            for e in cx.edges
        )
        if ok:
            return True
    return False


@dataclass(frozen=True, eq=False)
class HolMorphism:
    """A basepoint-preserving graph map: vertices to vertices, edges to edges."""

    vertex_map: dict[str, str]
    edge_map: dict[str, str]

    def on_word(self, dst_cx: BaseComplex, word: PathWord) -> PathWord:
        steps = tuple(EdgeStep(self.edge_map[s.edge], s.forward) for s in word.steps)
        return dst_cx.word(steps, at=self.vertex_map[word.src])


def check_hol_morphism(f: HolMorphism, src: BaseComplex, dst: BaseComplex) -> None:
    """Raise NonEquivariantSpec unless f is a pointed, incidence-preserving map."""
    dst_vertices = set(dst.vertices)
    for v in src.vertices:
        if v not in f.vertex_map or f.vertex_map[v] not in dst_vertices:
            raise NonEquivariantSpec(f"vertex {v!r} has no valid image")
    for e in src.edges:
        if e.id not in f.edge_map or not dst.has_edge(f.edge_map[e.id]):
            raise NonEquivariantSpec(f"edge {e.id!r} has no valid image (edges must map to edges)")
        image = dst.edge(f.edge_map[e.id])
        if image.src != f.vertex_map[e.src] or image.dst != f.vertex_map[e.dst]:
            raise NonEquivariantSpec(f"edge {e.id!r} image breaks incidence")
    if f.vertex_map[src.basepoint] != dst.basepoint:
        raise NonEquivariantSpec("map does not preserve the basepoint")


def identity_hol_morphism(cx: BaseComplex) -> HolMorphism:
    return HolMorphism({v: v for v in cx.vertices}, {e.id: e.id for e in cx.edges})


def compose_hol_morphisms(second: HolMorphism, first: HolMorphism) -> HolMorphism:
    return HolMorphism(
        {v: second.vertex_map[first.vertex_map[v]] for v in first.vertex_map},
        {e: second.edge_map[first.edge_map[e]] for e in first.edge_map},
    )


def hol_morphism_to_bundle(f: HolMorphism, src: HolObject, dst: HolObject) -> BundleMap:
    """Push a holonomy-compatible base map to a morphism of rebuilt bundles.

    Compatibility H'(f о loop) = H(loop) is checked on chord generators; the
    fiber adjuster at x absorbs the mismatch between the image of the source
    tree path and the target tree path.
    """
    check_hol_morphism(f, src.complex, dst.complex)
    if src.spec.ctx != dst.spec.ctx:
        raise NonEquivariantSpec("holonomy objects use different groups")
    ctx = src.spec.ctx
    for chord, loop in sorted(chord_loops(src.complex, src.tree).items()):
        expected = src.spec.assignment[chord]
        got = dst.spec.eval(f.on_word(dst.complex, loop))
        if got != expected:
            raise HolonomyIncompatible(
                f"chord {chord!r}: image loop evaluates to "
                f"{ctx.to_literal(got)}, expected {ctx.to_literal(expected)}"
            )
    adjust: dict[str, GroupElement] = {}
    for v in src.complex.vertices:
        image_path = f.on_word(dst.complex, tree_path(src.tree, v))
        back = reduce_word(
            concat(image_path, reverse_word(tree_path(dst.tree, f.vertex_map[v])))
        )
        adjust[v] = dst.spec.eval(back)
    return BundleMap(dict(f.vertex_map), dict(f.edge_map), adjust)


def bundle_morphism_to_hol(F: BundleMap, src: BCObject, dst: BCObject) -> HolMorphism:
    """Forget the fiber data of a bundle morphism, keeping the base map."""
    if not check_bundle_morphism(F, src.gauge, dst.gauge):
        raise NonEquivariantSpec("bundle map does not intertwine the transports")
    return HolMorphism(dict(F.vertex_map), dict(F.edge_map))


# Round-trip verification


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail"
    witness: dict | None = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"


@dataclass
class Report:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, witness: dict | None = None) -> None:
        self.checks.append(CheckResult(name, "pass" if ok else "fail", None if ok else witness))

    def sorted(self) -> Report:
        return Report(sorted(self.checks, key=lambda c: c.name))

    def to_jsonable(self) -> dict:
        out = []
        for c in self.checks:
            entry: dict[str, Any] = {"name": c.name, "status": c.status}
            if c.witness is not None:
                entry["witness"] = c.witness
            out.append(entry)
        return {"format": 1, "checks": out}


def _enumerate_reduced_loops(cx: BaseComplex, max_len: int) -> list[PathWord]:
    from .instances import enumerate_reduced_loops

    return enumerate_reduced_loops(cx, max_len)


def verify_reconstruction(
    bc: BCObject,
    report: Report,
    prefix: str,
    max_word_len: int = 3,
    anchor_max_len: int | None = None,
) -> None:
    """Check the four isomorphism conditions for the rebuilt bundle of `bc`.

    Bijectivity and equivariance are exhaustive for finite groups.  The
    connection square is checked on horizontal projections of associated
    paths over every base word up to `max_word_len`; the anchor class at the
    projection index ranges over all reduced words up to `anchor_max_len`
    when given, otherwise over the tree paths.
    """
    ctx = bc.ctx
    iso = reconstruct_iso(bc)
    spec = iso.spec
    cx = bc.complex

    if ctx.is_finite:
        els = ctx.elements()
        images = set()
        injective = True
        for v in cx.vertices:
            for g in els:
                xi = iso.forward_canonical(v, g)
                if (xi.base, xi.fiber) in images:
                    injective = False
                images.add((xi.base, xi.fiber))
        surjective = len(images) == len(cx.vertices) * len(els)
        report.add(prefix + "/bijective", injective and surjective)
        round_ok = all(
            iso.inverse(iso.forward_canonical(v, g)) == (v, g)
            for v in cx.vertices
            for g in els
        )
        report.add(prefix + "/inverse-roundtrip", round_ok)
        test_elements = els
    else:
        sample = [ctx.identity()] + list(spec.assignment.values())
        round_ok = all(
            iso.inverse(iso.forward_canonical(v, g)) == (v, g)
            for v in cx.vertices
            for g in sample
        )
        report.add(prefix + "/inverse-roundtrip", round_ok)
        test_elements = sample

    equivariant = True
    witness = None
    for v in cx.vertices:
        path = tree_path(bc.tree, v)
        for g in test_elements:
            ap = AssociatedPoint(path, g)
            for h in test_elements:
                lhs = iso.forward(AssociatedPoint(path, ctx.mul(g, h)))
                rhs = BundlePoint(lhs.base, ctx.mul(iso.forward(ap).fiber, h))
                if lhs != rhs:
                    equivariant = False
                    witness = {"vertex": v, "g": ctx.to_literal(g), "h": ctx.to_literal(h)}
    report.add(prefix + "/equivariant", equivariant, witness)

    base_ok = all(
        iso.forward_canonical(v, g).base == v for v in cx.vertices for g in test_elements
    )
    report.add(prefix + "/base-compatible", base_ok)

    intertwine_ok = True
    witness = None
    from .instances import enumerate_words, reduced_words_from

    if anchor_max_len is None:
        anchors = {v: [tree_path(bc.tree, v)] for v in cx.vertices}
    else:
        pool = reduced_words_from(cx, cx.basepoint, anchor_max_len)
        anchors = {v: [w for w in pool if w.dst == v] for v in cx.vertices}
    fiber_sample = test_elements if len(test_elements) <= 8 else [ctx.identity()] + list(
        spec.assignment.values()
    )
    tree_anchor = {v: AssociatedPoint(tree_path(bc.tree, v), ctx.identity()) for v in cx.vertices}
    for base_word in enumerate_words(cx, max_word_len):
        n = len(base_word.steps)
        for r in range(n + 1):
            v_r = base_word.vertex_at(r)
            for anchor_word in anchors[v_r]:
                for g in fiber_sample:
                    points = tuple(
                        AssociatedPoint(anchor_word, g)
                        if i == r
                        else tree_anchor[base_word.vertex_at(i)]
                        for i in range(n + 1)
                    )
                    apath = AssocPath(base_word, points)
                    projected = associated_connection(apath, r)
                    lhs = iso.forward_path(projected)
                    start = iso.forward(apath.points[r])
                    rhs = horizontal_lift(bc.gauge, base_word, r, start)
                    if lhs != rhs:
                        intertwine_ok = False
                        witness = {
                            "base": base_word.literal(),
                            "r": r,
                            "anchor": anchor_word.literal(),
                            "g": ctx.to_literal(g),
                        }
    report.add(prefix + "/connection-intertwining", intertwine_ok, witness)


def roundtrip_check(
    hol_objects: Sequence[HolObject] = (),
    bc_objects: Sequence[BCObject] = (),
    max_loop_len: int = 4,
    ids: Iterable[str] | None = None,
    iso_word_len: int = 2,
) -> Report:
    """Run both round trips and the isomorphism verification, one report entry
    per check, entries sorted by name."""
    report = Report()
    names = list(ids) if ids is not None else None

    for i, obj in enumerate(hol_objects):
        label = names[i] if names else f"hol-{i:03d}"
        bc = bundle_from_holonomy(obj)
        back = holonomy_of_bundle(bc)
        report.add(
            label + "/hol-bc-hol-identity",
            back == obj,
            {
                "chords": {
                    c: {
                        "expected": obj.spec.ctx.to_literal(obj.spec.assignment[c]),
                        "got": obj.spec.ctx.to_literal(back.spec.assignment[c]),
                    }
                    for c in obj.spec.assignment
                }
            },
        )
        loops = _enumerate_reduced_loops(obj.complex, max_loop_len)
        bad = None
        for loop in loops:
            if holonomy_rep(bc.gauge, bc.xi0, loop) != obj.spec.eval(loop):
                bad = loop
                break
        report.add(
            label + "/holonomy-realized",
            bad is None,
            None if bad is None else {"loop": bad.literal()},
        )

    offset = len(hol_objects)
    for i, bc in enumerate(bc_objects):
        label = names[offset + i] if names else f"bc-{i:03d}"
        obj = holonomy_of_bundle(bc)
        rebuilt = bundle_from_holonomy(obj)
        again = holonomy_of_bundle(rebuilt)
        report.add(label + "/bc-hol-bc-holonomy", again.spec == obj.spec)
        verify_reconstruction(bc, report, label + "/iso", max_word_len=iso_word_len)
        loops = _enumerate_reduced_loops(bc.complex, max_loop_len)
        bad = None
        for loop in loops:
            lhs = holonomy_rep(bc.gauge, bc.xi0, loop)
            rhs = obj.spec.eval(loop)
            if lhs != rhs:
                bad = loop
                break
        report.add(
            label + "/extracted-holonomy-consistent",
            bad is None,
            None if bad is None else {"loop": bad.literal()},
        )

    return report.sorted()
