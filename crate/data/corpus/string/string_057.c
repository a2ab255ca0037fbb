/* length of a string */
int main()
{
    char str[1000];
    int l;
    scanf("%s", str);
    for (l = 0; str[l]; l++)
        ;
    printf("%d\n", l);
    return 0;
}
