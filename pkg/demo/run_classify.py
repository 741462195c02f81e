import dswitch
from dswitch.helper import dump_json


res = dswitch.run('classify', {'design': 'designs/fano.json'}, 'config.yaml')
print(dump_json(res))
