import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from topofilter.adapters import (
    FormatError,
    GridImage,
    image_to_gwf,
    mesh_to_gwf,
    pgm_text,
    read_off,
    read_pgm,
    read_series,
    series_to_signal,
    signal_to_image,
    write_pgm,
    write_series,
)
from topofilter.complex import pd_gwf
from topofilter.core import INF, ValidationError
from topofilter.generators import bumps_image, random_graph_signal, random_grid_image
from topofilter.instances import octahedron, tetrahedron, torus
from topofilter.serialize import diagram_from_json, diagram_to_json, dumps, signal_from_json, signal_to_json


@pytest.mark.parametrize("h, w", [(1, 1), (1, 5), (4, 1), (2, 2), (3, 7)])
def test_grid_counts(h, w):
    gwf, emb, s = image_to_gwf(GridImage(h, w, (0,) * (h * w)))
    assert s.graph.vertex_count == h * w
    assert s.graph.edge_count == (h - 1) * w + h * (w - 1)
    assert len(gwf.faces) == (h - 1) * (w - 1)
    assert len(emb.holes) == 1


def test_strip_image_is_a_path():
    gwf, emb, s = image_to_gwf(GridImage(1, 4, (2, 0, 3, 1)))
    assert not gwf.faces
    assert pd_gwf(gwf, emb, s, 1).nontrivial() == pd_gwf(gwf, emb, s, 1).nontrivial().dimension(1)
    assert len(pd_gwf(gwf, emb, s, 1).nontrivial()) == 0
    assert len(pd_gwf(gwf, emb, s, 0).nontrivial()) == 2


def test_series():
    s = series_to_signal([1, 2, 3])
    assert s.graph.edges == ((0, 1), (1, 2))
    with pytest.raises(ValidationError):
        series_to_signal([])


def test_meshes():
    verts, tris = tetrahedron()
    gwf, emb, s = mesh_to_gwf(verts, tris, [0, 1, 2, 3])
    assert len(gwf.faces) == 4 and not emb.holes
    verts, tris, scalar = octahedron()
    assert len(mesh_to_gwf(verts, tris, scalar)[0].faces) == 8
    verts, tris = torus()
    with pytest.raises(ValidationError):
        mesh_to_gwf(verts, tris, [0.0] * len(verts))


def test_pgm_round_trip(tmp_path):
    img = GridImage(2, 3, (0, 5, 255, 7, 8, 9))
    p = tmp_path / "a.pgm"
    write_pgm(img, p)
    assert read_pgm(p) == img


def test_pgm_rounding_and_clipping():
    img = GridImage(1, 4, (2.5, 3.5, -4, 300), maxval=255)
    assert pgm_text(img).splitlines()[-1] == "2 4 0 255"


@pytest.mark.parametrize("text", ["P5\n1 1\n255\n0\n", "P2\n2 2\n255\n1 2 3\n", "P2\nx", ""])
def test_bad_pgm(tmp_path, text):
    p = tmp_path / "bad.pgm"
    p.write_text(text)
    with pytest.raises(FormatError):
        read_pgm(p)


def test_series_files(tmp_path):
    p = tmp_path / "s.csv"
    write_series([1.5, INF, -2.0], p)
    assert read_series(p) == [1.5, INF, -2.0]
    p.write_text("# header\n1\n\nfoo\n")
    with pytest.raises(FormatError):
        read_series(p)


def test_off(tmp_path):
    p = tmp_path / "t.off"
    verts, tris = tetrahedron()
    body = "\n".join(" ".join(map(str, v)) for v in verts)
    faces = "\n".join("3 " + " ".join(map(str, t)) for t in tris)
    p.write_text(f"OFF\n4 4 6\n{body}\n{faces}\n")
    assert read_off(p) == ([tuple(map(float, v)) for v in verts], tris)
    p.write_text("OFF\n4 4 6\n0 0 0\n")
    with pytest.raises(FormatError):
        read_off(p)


def test_array_round_trip():
    arr = np.arange(6.0).reshape(2, 3)
    img = GridImage.from_array(arr)
    assert np.array_equal(img.to_array(), arr)
    _, _, s = image_to_gwf(img)
    assert signal_to_image(s, img) == img


@given(st.integers(0, 2**32 - 1))
def test_signal_json_round_trip(seed):
    rng = np.random.default_rng(seed)
    gwf, emb, s = image_to_gwf(random_grid_image(rng))
    data = signal_to_json(gwf, emb, s)
    assert signal_from_json(data) == (gwf, emb, s)
    g = random_graph_signal(rng)
    assert signal_from_json({"vertices": list(g.values), "edges": [list(e) for e in g.graph.edges]})[2] == g


def test_json_infinities_and_diagrams():
    gwf, emb, s = signal_from_json({"vertices": [0, "inf"], "edges": [[0, 1]]})
    assert s.values == (0, INF)
    d = pd_gwf(gwf, emb, s, 0)
    assert diagram_from_json(diagram_to_json(d)) == d
    assert dumps({"b": 1, "a": "inf"}) == '{"a": "inf", "b": 1}\n'
    with pytest.raises(ValidationError):
        signal_from_json({"vertices": ["-inf", 0], "edges": [[0, 1]]})
    with pytest.raises(FormatError):
        signal_from_json([1, 2])


def test_generators_are_seeded():
    a = bumps_image(np.random.default_rng(5))
    b = bumps_image(np.random.default_rng(5))
    assert a == b and a.height == a.width == 64
    assert all(0 <= x <= 255 for x in a.values)
