import json

import pytest

from cbgraph.adapt import ProbeResult
from cbgraph.bench.cli import build_parser, main
from cbgraph.engine import UpdateOp
from cbgraph.io import load_reports, save_probe, save_update_stream


def _json_lines(text):
    return [json.loads(line) for line in text.splitlines()
            if line.startswith('{')]


def test_parser_defaults():
    args = build_parser().parse_args(['sweep', 'g.txt'])
    assert args.coroutines == [1, 8]
    assert args.threads == [1]
    args = build_parser().parse_args(['run', 'g.txt', '--threads', '2'])
    assert args.threads == 2
    assert args.config is None


def test_load_prints_audit(edge_file, capsys):
    assert main(['-q', 'load', edge_file]) == 0
    summary = _json_lines(capsys.readouterr().out)[0]
    assert summary['ordered'] is True
    assert summary['vertices'] == 7
    assert summary['edges'] == 7
    assert summary['seconds'] >= 0.0


def test_run_writes_reports(edge_file, tmp_path, capsys):
    report_file = str(tmp_path / 'runs.jsonl')
    assert main(['-q', 'run', edge_file, '--workload', 'bfs',
                 '--strategy', 'HybridII', '--coroutines', '3',
                 '--report', report_file]) == 0
    printed = _json_lines(capsys.readouterr().out)[0]
    assert printed['mode'] == 'HybridII'
    assert printed['config']['tasks_per_thread'] == 3
    assert load_reports(report_file)[0]['output_digest'] == \
        printed['output_digest']


def test_run_tuned_from_probe_file(edge_file, tmp_path, capsys):
    probe = ProbeResult(c_m=100.0, c_coro=50.0,
                        p_h={'sequential': 0.0, 'chain': 0.0, 'tree': 0.0},
                        recommended_m=5)
    probe_file = str(tmp_path / 'probe.json')
    save_probe(probe_file, probe)
    assert main(['-q', 'run', edge_file, '--workload', 'query',
                 '--config', probe_file]) == 0
    printed = _json_lines(capsys.readouterr().out)[0]
    assert printed['config']['tasks_per_thread'] == 5
    assert printed['config']['partitioner'] == 'vertex_range'


def test_update_from_stream_file(edge_file, tmp_path, capsys):
    stream_file = str(tmp_path / 'stream.txt')
    save_update_stream(stream_file, [UpdateOp('insert_edge', 5, 0, 2.0),
                                     UpdateOp('delete_edge', 0, 1),
                                     UpdateOp('delete_vertex', 6)])
    assert main(['-q', 'update', edge_file, '--stream', stream_file,
                 '--batch-size', '2']) == 0
    printed = _json_lines(capsys.readouterr().out)[0]
    assert printed['units'] == 'updates/s'
    assert printed['batch_size'] == 2


def test_sweep_command(edge_file, tmp_path, capsys):
    assert main(['-q', 'sweep', edge_file, '--workload', 'cc',
                 '--strategy', 'IE', '--coroutines', '2',
                 '--output-dir', str(tmp_path)]) == 0
    printed = _json_lines(capsys.readouterr().out)
    assert sorted(r['mode'] for r in printed) == ['IE', 'SE']
    assert list(tmp_path.glob('*sweep-summary.csv'))


def test_failed_run_is_reported(edge_file, capsys):
    assert main(['-q', 'run', edge_file, '--workload', 'sssp',
                 '--source', '99']) == 1
    printed = _json_lines(capsys.readouterr().out)[0]
    assert printed['status'] == 'failed'
    assert '99' in printed['error']


def test_errors_exit_with_status_2(edge_file, tmp_path):
    bad = tmp_path / 'bad.txt'
    bad.write_text('0 1\n0\n')
    assert main(['-q', 'load', str(bad)]) == 2
    assert main(['-q', 'run', edge_file, '--config',
                 str(tmp_path / 'none.json')]) == 2
    with pytest.raises(SystemExit):
        main(['run', str(bad), '--workload', 'triangles'])
