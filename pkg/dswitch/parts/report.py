from __future__ import division, absolute_import, print_function

import os
import logging
import dswitch

from tabulate import tabulate

from dswitch.helper import dump_json


class PartReport(dswitch.DSwitchPart):
    '''
    Logs a summary of the command report and writes it to the output
    file of the common section, "-" leaves it to the caller

        Config Example:
        ---------------
        "common": {
            "output": "./reports/fano.json"
        }
    '''

    PRIORITY = 100

    def finish(self, result) -> None:
        report = self._instance.report
        if report is None:
            return
        summary = create_summary(report)
        if summary:
            self.log(summary, logging.INFO)
        output = self._instance.config['common'].get('output', '-')
        if output and output != '-':
            path = os.path.dirname(output)
            if path and not os.path.isdir(path):
                os.makedirs(path)
            dump_json(report, output)
            self.log(f'Report written to {output}\n', logging.DEBUG)


def create_summary(report: dict) -> str:
    '''
    Creates a table of the scalar values of a report
    '''
    rows = [['command', report['command']], ['status', report['status']]]
    for k in sorted(report['payload']):
        value = report['payload'][k]
        if isinstance(value, (bool, int, str)) or value is None:
            rows.append([k, value])
    return tabulate(rows, tablefmt='fancy_grid')
