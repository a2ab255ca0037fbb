typedef struct {
    int key;
    int id;
} node;

int main()
{
    node data[500], sw;
    int num;
    int k, q;
    scanf("%d", &num);
    for (k = 0; k < num; k++) {
        scanf("%d", &data[k].key);
        data[k].id = k + 1;
    }
    for (k = 0; k < num - 1; k++) {
                for (q = 0; q < num - 1 - k; q++) {
                    if (data[q].key > data[q + 1].key) {
                                    sw = data[q];
                                    data[q] = data[q + 1];
                                    data[q + 1] = sw;
                                }
                }
    }
    for (k = 0; k < num; k++)
        printf("%d ", data[k].id);
    return 0;
}
