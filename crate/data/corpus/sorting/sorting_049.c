typedef struct {
    int key;
    int id;
} node;

int main()
{
    node data[500], temp;
    int size;
    scanf("%d", &size);
    for (int k = 0; k < size; k++) {
        scanf("%d", &data[k].key);
        data[k].id = k + 1;
    }
    for (int k = 0; k < size - 1; k++) {
                for (int q = 0; q < size - 1 - k; q++) {
                    if (data[q].key > data[q + 1].key) {
                                    temp = data[q];
                                    data[q] = data[q + 1];
                                    data[q + 1] = temp;
                                }
                }
    }
    for (int k = 0; k < size; k++)
        printf("%d ", data[k].id);
    return 0;
}
