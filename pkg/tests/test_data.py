import os

import pytest

from cbgraph.data import download_snap_graph, make_random_graph, random_edges


def _read(path):
    with open(path) as fid:
        return fid.read()


def test_random_edges_are_distinct_without_loops():
    edges = random_edges(30, 200, seed=1)
    pairs = [(s, d) for s, d, _ in edges]
    assert len(pairs) == len(set(pairs)) == 200
    assert all(s != d for s, d in pairs)
    assert all(1.0 <= w <= 100.0 for _, _, w in edges)
    assert edges == random_edges(30, 200, seed=1)


def test_random_edges_options():
    assert len(random_edges(3, 100)) == 6
    assert random_edges(1, 10) == []
    unweighted = random_edges(50, 40, seed=2, weights=False)
    assert all(w is None for _, _, w in unweighted)
    skewed = random_edges(200, 400, seed=2, skew=2.0)
    sources = [s for s, _, _ in skewed]
    assert sources.count(0) > sources.count(100)


def test_make_random_graph_keeps_existing(tmp_path):
    first = make_random_graph(10, 20, output_dir=str(tmp_path))['edges']
    assert os.path.basename(first) == 'random_10_20_s0.txt'
    with open(first, 'a') as fid:
        fid.write('# edited\n')
    again = make_random_graph(10, 20, output_dir=str(tmp_path))['edges']
    assert again == first
    assert _read(again).endswith('# edited\n')
    make_random_graph(10, 20, output_dir=str(tmp_path), overwrite=True)
    assert not _read(first).endswith('# edited\n')


def test_download_skips_existing_files(tmp_path):
    target = tmp_path / 'snap' / 'soc-pokec-relationships.txt.gz'
    target.parent.mkdir()
    target.write_bytes(b'')
    result = download_snap_graph('pokec', data_dir=str(tmp_path))
    assert result['edges'] == str(target)
    with pytest.raises(ValueError):
        download_snap_graph('myspace', data_dir=str(tmp_path))
