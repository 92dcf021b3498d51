from cbgraph.cblist.cblist import CBList
from cbgraph.cblist.cblist import VertexRecord
from cbgraph.cblist.cblist import EdgeRecord
from cbgraph.cblist.cblist import AuditReport
from cbgraph.cblist.cblist import INSERTED, UPDATED
from cbgraph.cblist.id_map import IdMap
from cbgraph.cblist.blocks import BlockAllocator
from cbgraph.cblist.blocks import CHUNK, LEAF, INTERNAL
