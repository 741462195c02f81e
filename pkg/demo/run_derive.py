import dswitch
from dswitch.helper import dump_json


res = dswitch.run('scheme', {'action': 'derive', 'design': 'designs/ag22.json',
                             'perm': '(1 6)(2 5)(3 4)'}, 'config.yaml')
print(dump_json(res))
