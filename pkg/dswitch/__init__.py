"""
Design switching runner with support for config files

Switching methods for cospectral graphs are derived, checked and applied
by commands. Every command is executed by a set of parts which are
configured by a config file and the command arguments.

Intention
---------

    The intention of dswitch is to provide a basic framework to derive
    switching methods from (r, lambda)-designs and block permutations,
    to apply them to graphs and to reproduce the catalog of known
    methods. Commands:

    * design: validate or close a design
    * scheme: derive and inspect switching schemes
    * switch: verify a switching site or apply a switch
    * verify: check cospectrality of two graphs
    * classify: double coset classification of a design
    * catalog: list, show or check the catalog entries
    * geometry: switch a plane of a q-triangular graph
    * identities: reproduce the counting identities

    Every command can set different settings in its own override
    section.


How to run
----------

    Simple example:
    ```
    import dswitch

    if __name__ == '__main__':
        report = dswitch.run('design', {'action': 'validate',
                                        'file': 'fano.json'})
    ```

    Example with customization:

    ```
    from dswitch import DSwitch

    ds = DSwitch()
    ds.PATH_DSWITCH_PART.append('my_parts')
    ds.LOAD_DSWITCH_PART.append('PartMine')

    if __name__ == '__main__':
        ds.run('catalog', {'action': 'list'}, 'config.yaml')
    ```

Config file
-----------

    #### [common]
    Common configuration

        * time (datetime): The time dswitch was initialized
        * threads (int): Worker processes for long searches
        * seed (int): Default seed for random constructions
        * create_log (bool): Should a log be created
        * log_path (str): Path for log files
        * output (str): File for the command report, "-" for stdout

    #### [logging]
    Configuration for logging

        * log_to_console (bool):
          Should log entries be logged to console (true/false)
        * log_to_file (bool):
          Should log entries be logged into files (true/false)
        * level (string):
          Log level to log (ex. "INFO")

    See dswitch.parts.logging for more details

    #### [design]
    Configuration for designs

        * file (str): Design JSON file
        * add_empty_full (bool): Closure adds the empty and full block
        * add_complements (bool): Closure adds the complements

    #### [search]
    Bounds of the exhaustive searches

        * max_group_elements (int): Largest block permutation group
        * double_coset_budget (int): Products formed for double cosets
        * max_compatible_v (int): Largest scheme for compatible vectors
        * max_ac_v (int): Largest scheme for the A_C search
        * max_iso_vertices (int): Largest graph for isomorphism tests
        * max_clique_vertices (int): Largest graph for clique reports
        * reduce_budget (int): Products formed by reduce_scheme
        * reduce_max_factors (int): Longest product in reduce_scheme

    #### [classify]
    Configuration for classification

        * parallelism_only (bool): Only parallelism preserving block
          permutations
        * with_ac (bool): Count compatible A_C for every scheme
        * reduce (bool): Try to reduce every scheme to the basis

    See dswitch.parts.classify for more details

    #### [geometry]
    Configuration for the q-triangular graphs

        * q (int): Field order, 2 or 3
        * n (int): Vector space dimension
        * switch_plane (int): Index of the switched plane
        * perm (str): Permutation of the point-pencils of the plane

    See dswitch.parts.geometry for more details

    #### [switch]
    Configuration for switching

        * strict (bool): Only accept blocks of the source design as
          outside neighbourhoods

    #### [catalog]
    Configuration for the catalog

        * ids (list): Ids to list or check, all if empty
        * levels (bool): Check the levels of the entries

    #### [identities]
    Configuration for the identities command

        * c (list): Part sizes to check

    #### [_design], [_scheme], [_switch], [_verify], [_classify],
    #### [_catalog], [_geometry], [_identities]
    Configuration merged on top of the config when running the command
"""
from __future__ import division, absolute_import, print_function

import time
import logging

from copy import deepcopy
from datetime import datetime, timedelta
from threading import Lock

from .errors import DSwitchError, FormatError
from .version import __version__
from .helper import get_classes, merge_dicts, load_yaml, default_threads


# constants
TIMEFORMAT = '%Y-%m-%d %H:%M:%S'
FILE_TIMEFORMAT = '%Y%m%d_%H%M%S'
COMMANDS = ['design', 'scheme', 'switch', 'verify', 'classify', 'catalog',
            'geometry', 'identities']
STATUS_OK, STATUS_ERROR = 'ok', 'error'

# default config dict
CONFIG_DEFAULT = {
    'common': {
        'threads': None, 'seed': 0, 'create_log': False,
        'log_path': './logs', 'output': '-'
    }, 'logging': {
        'log_to_console': True, 'log_to_file': False, 'level': 'INFO'
    }, 'design': {
        'file': None, 'add_empty_full': False, 'add_complements': False
    }, 'search': {
        'max_group_elements': 10 ** 6, 'double_coset_budget': 10 ** 8,
        'max_compatible_v': 24, 'max_ac_v': 10, 'max_iso_vertices': 64,
        'max_clique_vertices': 130, 'reduce_budget': 200000,
        'reduce_max_factors': 4
    }, 'classify': {
        'parallelism_only': False, 'with_ac': False, 'reduce': False
    }, 'geometry': {
        'q': 2, 'n': 4, 'switch_plane': 0, 'perm': '(1 2)'
    }, 'switch': {
        'strict': False
    }, 'catalog': {
        'ids': [], 'levels': True
    }, 'identities': {
        'c': [2, 3, 4, 5, 6]
    },
    **{f'_{x}': {} for x in COMMANDS}}

# default search paths for classes
PATH_DSWITCH_PART = ['dswitch.parts']

# default different parts to load
LOAD_DSWITCH_PART = ['PartLogging', 'PartDesign', 'PartScheme', 'PartSwitch',
                     'PartVerify', 'PartClassify', 'PartCatalog',
                     'PartGeometry', 'PartIdentities', 'PartReport']

instances = []


class DSwitch:

    parts_thread_lock = Lock()

    def __init__(self, command: str = None, configfile: str = None) -> None:
        '''
        Initialization
        '''
        global instances
        instances.append(self)
        # misc vars
        self._filename = configfile  # filename of config
        self._config = None          # complete configuration
        self._parts = {}             # all loaded parts
        # global vars
        self.logger = logging.getLogger('dswitch')
        self.command = command       # current command
        self.args = {}               # current command arguments
        self.config = None           # current configuration
        self.result = []             # payloads of the parts
        self.report = None           # command report
        self.duration = None         # duration of last execution

        # paths
        self.PATH_DSWITCH_PART = PATH_DSWITCH_PART.copy()
        self.LOAD_DSWITCH_PART = LOAD_DSWITCH_PART.copy()

    def _loadParts(self) -> None:
        '''
        Loads all available parts
        '''
        all_classes = get_classes(self.PATH_DSWITCH_PART)
        self._parts = {}
        for classname in self.LOAD_DSWITCH_PART:
            if classname not in all_classes:
                raise Exception(f'Part {classname} not found')
            self._parts[classname] = all_classes[classname](self)

    def _getParts(self) -> list:
        '''
        Returns a sorted list of all available parts
        '''
        keys = sorted(
            self._parts,
            key=lambda x: self._parts[x].PRIORITY,
            reverse=False)
        return [self._parts[x] for x in keys]

    def _getConfigForCommand(self, command: str) -> dict:
        '''
        Returns the config for the given command

            Args:
            -----
            - command (str): The command the config will be generated for

            Returns:
            --------
            dict
        '''
        if command not in COMMANDS:
            raise ValueError(f'Unknown command {command!r} provided')
        res = deepcopy(self._config)
        merge_dicts(res, res.get(f'_{command}', {}))
        # remove override sections
        for v in COMMANDS:
            if f'_{v}' in res:
                del res[f'_{v}']
        if res['common'].get('threads') is None:
            res['common']['threads'] = default_threads()
        return res

    def _prepare(self, command: str, args: dict, configfile: str) -> None:
        '''
        Initialization of dswitch using a config file

            Args:
            -----
            - command (str): Optional, the command to execute
            - args (dict): Optional, arguments of the command
            - configfile (str): Optional, configfile to use

            Returns:
            --------
            None
        '''
        # load config from filename, user values on top of the defaults
        if configfile is not None:
            self._filename = configfile
        config = deepcopy(CONFIG_DEFAULT)
        if self._filename:
            merge_dicts(config, load_yaml(self._filename) or {})
        elif self._config is not None:
            merge_dicts(config, self._config)
        self._config = config
        # store time at which dswitch was initialized
        self._config['common']['time'] = datetime.now()

        # set command
        if command is not None:
            self.command = command
        if self.command is None:
            raise ValueError('No command defined')
        self.args = dict(args or {})
        # set config for command
        self.config = self._getConfigForCommand(self.command)
        # command line values override the common section
        for key in ('threads', 'seed', 'output'):
            if self.args.get(key) is not None:
                self.config['common'][key] = self.args[key]

        # reset result
        self.result = []
        self.report = None

    def _setup(self) -> None:
        '''
        Sets all parts

            Returns:
            --------
            None
        '''
        for p in self._getParts():
            p.setup()

    def _run(self) -> None:
        '''
        Runs all parts, domain errors end up in the report

            Returns:
            --------
            None
        '''
        t = time.process_time()
        res = []
        try:
            for p in self._getParts():
                tmp = p.run()
                if tmp is None:
                    continue
                if not isinstance(tmp, list):
                    continue
                if not len(tmp):
                    continue
                res.extend(tmp)
            payload = {}
            for x in res:
                payload.update(x)
            self.report = self._createReport(STATUS_OK, payload)
        except DSwitchError as e:
            self.log(f'{e.name}: {e.message}\n', logging.ERROR)
            self.report = self._createReport(STATUS_ERROR, e.to_dict())
        self.result = res
        self.duration = time.process_time() - t

    def _finish(self) -> None:
        '''
        Finishes execution

            Returns:
            --------
            None
        '''
        for p in self._getParts():
            p.finish(self.result)

    def _createReport(self, status: str, payload: dict) -> dict:
        action = self.args.get('action')
        command = f'{self.command} {action}' if action else self.command
        return {'command': command, 'status': status, 'payload': payload}

    def setConfig(self, config: dict) -> None:
        '''
        Sets the config dict
        '''
        self._config = config

    def run(self, command: str = None, args: dict = None,
            configfile: str = None) -> dict:
        '''
        Runs a command and returns its report

            Args:
            -----
            - command (str): Optional, one of COMMANDS
            - args (dict): Optional, arguments with at least the action
            - configfile (str): Optional, configfile to use

            Returns:
            --------
            dict with command, status and payload
        '''
        with DSwitch.parts_thread_lock:
            # load different parts of dswitch
            self._loadParts()
            # prepare and setup everything
            self._prepare(command, args, configfile)
            self.log('Preparing execution\n')
            self._setup()
        self.log(f'All parts set up and configured, running {self.command}\n')
        self._run()
        duration = timedelta(seconds=self.duration)
        self.log(f'Command executed in {duration}, finishing execution\n')
        self._finish()
        return self.report

    def log(self, txt: str, level: int = logging.INFO) -> None:
        '''
        Logs text

            Args:
            -----
            - txt (str): The text to log
            - level (int): The log level

            Returns:
            --------
            None
        '''
        if self.config is None:
            raise Exception('No config loaded')
        if self.config['common'].get('create_log', False):
            self.logger.log(level, txt)


class DSwitchPart:

    PRIORITY = 0
    COMMAND = None

    def __init__(self, instance: DSwitch) -> None:
        '''
        Initialization
        '''
        self._instance = instance
        self._prepare()

    def _prepare(self):
        '''
        Prepare method
        '''
        pass

    @property
    def active(self) -> bool:
        return self.COMMAND is not None and self._instance.command == self.COMMAND

    @property
    def action(self) -> str:
        return self._instance.args.get('action')

    def arg(self, name: str, section: str = None, default=None):
        '''
        Returns a command argument, falls back to the config section

            Args:
            -----
            - name (str): Name of the argument and config value
            - section (str): Optional, config section to fall back to
            - default: Optional, value if neither is set

            Returns:
            --------
            value
        '''
        value = self._instance.args.get(name)
        if value is not None:
            return value
        if section is not None:
            value = self._instance.config.get(section, {}).get(name)
            if value is not None:
                return value
        return default

    def require(self, name: str, section: str = None):
        '''
        Returns an argument which has to be set
        '''
        value = self.arg(name, section)
        if value is None:
            raise FormatError(f'Missing argument {name!r} for {self.COMMAND}')
        return value

    def search(self, name: str):
        '''
        Returns a bound from the search section
        '''
        return self._instance.config['search'][name]

    def log(self, txt: str, level: int = logging.INFO) -> None:
        '''
        Logs messages
        '''
        self._instance.log(txt, level)

    def setup(self) -> None:
        '''
        Sets up part
        '''
        pass

    def run(self):
        '''
        Runs the part, returns a list of payload dicts
        '''
        if not self.active:
            return
        name = (self.action or self.COMMAND).replace('-', '_')
        method = getattr(self, '_' + name, None)
        if method is None:
            raise ValueError(f'Unknown action {self.action!r} for {self.COMMAND}')
        return [method()]

    def finish(self, result) -> None:
        '''
        Finishes part execution
        '''
        pass


def run(command: str, args: dict = None, configfile: str = None) -> dict:
    '''
    Runs a command with a new DSwitch instance
    '''
    ds = DSwitch()
    return ds.run(command, args, configfile)
