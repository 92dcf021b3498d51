import json
import logging

logger = logging.getLogger(__name__)


def save_reports(filename, reports, append=True):
    '''
    Write run reports as JSON lines

    Parameters
    ----------
    filename: str
        Output path.
    reports: iterable of RunReport or dict
        Reports to write, one JSON object per line.
    append: bool
        Append to an existing file (default is True)
    '''
    logger.info("\nSaving %s", filename)
    with open(filename, 'a' if append else 'w') as fid:
        for report in reports:
            values = report.to_dict() if hasattr(report, 'to_dict') else report
            fid.write(json.dumps(values, sort_keys=True) + '\n')


def load_reports(filename):
    with open(filename) as fid:
        return [json.loads(line) for line in fid if line.strip()]


def save_summary(filename, table):
    '''
    Write a summary table (pandas DataFrame) as CSV
    '''
    logger.info("\nSaving %s", filename)
    table.to_csv(filename, index=False)
