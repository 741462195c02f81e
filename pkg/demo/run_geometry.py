import dswitch
from dswitch.helper import dump_json


res = dswitch.run('geometry', {'action': 'qtriangular'}, 'config.yaml')
print(dump_json(res))
